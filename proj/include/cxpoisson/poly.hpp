#ifndef CXPOISSON_POLY_HPP
#define CXPOISSON_POLY_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cxpoisson/gauss.hpp"

namespace cxp {

struct ChartMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnknownVariable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct MissingVariable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t column)
        : std::runtime_error(msg + " at column " + std::to_string(column)), column(column) {}
    std::size_t column;
};

/// Ordered list of distinct coordinate names.
class Chart {
public:
    Chart() = default;
    explicit Chart(std::vector<std::string> vars);

    int dim() const { return vars_ ? static_cast<int>(vars_->size()) : 0; }
    const std::vector<std::string>& vars() const;
    const std::string& var(int k) const { return vars().at(static_cast<std::size_t>(k)); }
    /// Position of a variable; throws UnknownVariable.
    int index(const std::string& name) const;
    bool contains(const std::string& name) const;

    friend bool operator==(const Chart& a, const Chart& b) {
        return a.vars_ == b.vars_ || (a.vars_ && b.vars_ && *a.vars_ == *b.vars_);
    }
    friend bool operator!=(const Chart& a, const Chart& b) { return !(a == b); }

private:
    std::shared_ptr<const std::vector<std::string>> vars_;
};

/// Coordinates of a point in chart order.
using Point = std::vector<Rational>;
using PointMap = std::map<std::string, Rational>;

Point to_point(const Chart& chart, const PointMap& values);

using Exponent = std::vector<unsigned>;

/// Graded order: total degree first, then lexicographic in chart order.
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse polynomial in the chart variables with Gaussian-rational coefficients.
class Poly {
public:
    using Terms = std::map<Exponent, GaussScalar, GrlexLess>;

    Poly() = default;
    explicit Poly(Chart chart) : chart_(std::move(chart)) {}
    Poly(Chart chart, const GaussScalar& c);

    static Poly variable(const Chart& chart, const std::string& name);
    static Poly variable(const Chart& chart, int k);
    static Poly monomial(const Chart& chart, const Exponent& e, const GaussScalar& c);
    /// Parses the text grammar; throws ParseError / UnknownVariable.
    static Poly parse(const Chart& chart, const std::string& text);

    const Chart& chart() const { return chart_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_real() const;
    bool is_constant() const;
    int total_degree() const;
    /// Coefficient of the constant monomial.
    GaussScalar constant_term() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const GaussScalar& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const GaussScalar& c) { return a *= c; }
    friend Poly operator*(const GaussScalar& c, Poly a) { return a *= c; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.chart_ == b.chart_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly partial(int k) const;
    Poly partial(const std::string& name) const { return partial(chart_.index(name)); }

    GaussScalar eval(const Point& p) const;
    GaussScalar eval(const PointMap& p) const { return eval(to_point(chart_, p)); }
    /// Substitutes rational values for the listed variable positions, keeping the chart.
    Poly substitute(const std::map<int, Rational>& values) const;

    Poly conj() const;
    Poly real_part() const;
    Poly imag_part() const;

    std::string str() const;

private:
    void add_term(const Exponent& e, const GaussScalar& c);
    void require_same_chart(const Poly& o) const;

    Chart chart_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

// Free-function spellings of the arithmetic kinds.
inline Poly add(const Poly& a, const Poly& b) { return a + b; }
inline Poly sub(const Poly& a, const Poly& b) { return a - b; }
inline Poly mul(const Poly& a, const Poly& b) { return a * b; }
inline Poly scale(const Poly& a, const GaussScalar& c) { return a * c; }

}  // namespace cxp

#endif
