#ifndef CXPOISSON_MULTIVECTOR_HPP
#define CXPOISSON_MULTIVECTOR_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cxpoisson/poly.hpp"

namespace cxp {

/// Strictly increasing list of 0-based coordinate positions.
using IndexTuple = std::vector<int>;

enum class FieldKind { vector, form };

/// Degree-graded field with polynomial coefficients: a multivector field
/// (basis ∂_I) or a differential form (basis dx_I).
template <FieldKind K>
class Graded {
public:
    using Components = std::map<IndexTuple, Poly>;

    Graded() = default;
    Graded(Chart chart, int degree);

    /// Degree-0 field holding a function.
    static Graded function(const Poly& f);
    /// Degree-1 field from one coefficient per coordinate.
    static Graded from_components(const Chart& chart, const std::vector<Poly>& coeffs);
    /// The basis element ∂_k or dx_k.
    static Graded coordinate(const Chart& chart, int k);

    const Chart& chart() const { return chart_; }
    int degree() const { return degree_; }
    const Components& comps() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }
    bool is_real() const;

    /// Adds coeff times the basis element for idx; idx may be unsorted (sign applied)
    /// and a repeated index makes the term vanish.
    void add(IndexTuple idx, const Poly& coeff);
    /// Coefficient on a sorted index tuple (zero when absent).
    Poly coeff(const IndexTuple& idx) const;
    /// Component along ∂_k / dx_k of a degree-1 field.
    Poly coeff(int k) const { return coeff(IndexTuple{k}); }
    /// The function of a degree-0 field.
    Poly function_value() const { return coeff(IndexTuple{}); }

    Graded& operator+=(const Graded& o);
    Graded& operator-=(const Graded& o);
    friend Graded operator+(Graded a, const Graded& b) { return a += b; }
    friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
    Graded operator-() const { return *this * GaussScalar(-1); }
    friend Graded operator*(const Graded& a, const GaussScalar& c) { return a.map([&](const Poly& p) { return p * c; }); }
    friend Graded operator*(const GaussScalar& c, const Graded& a) { return a * c; }
    friend Graded operator*(const Poly& f, const Graded& a) { return a.map([&](const Poly& p) { return f * p; }); }

    friend bool operator==(const Graded& a, const Graded& b) {
        return a.chart_ == b.chart_ && a.degree_ == b.degree_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const Graded& a, const Graded& b) { return !(a == b); }

    Graded conj() const { return map([](const Poly& p) { return p.conj(); }); }
    Graded real_part() const { return map([](const Poly& p) { return p.real_part(); }); }
    Graded imag_part() const { return map([](const Poly& p) { return p.imag_part(); }); }
    Graded substitute(const std::map<int, Rational>& values) const {
        return map([&](const Poly& p) { return p.substitute(values); });
    }

    /// Coefficients evaluated at a point, keyed by index tuple.
    std::map<IndexTuple, GaussScalar> eval(const Point& p) const;

    /// Human-readable form, e.g. "(y + i*z) ∂y∧∂z" or "2 dq∧dp".
    std::string str() const;
    /// Basis label for one index tuple: "∂x∧∂y" or "dx∧dy" (ascii=true: "Dx^Dy", "dx^dy").
    std::string basis_label(const IndexTuple& idx, bool ascii = false) const;

    template <typename F>
    Graded map(F&& f) const {
        Graded r(chart_, degree_);
        for (const auto& [idx, p] : comps_) r.add(idx, f(p));
        return r;
    }

private:
    Chart chart_;
    int degree_ = 0;
    Components comps_;
};

using MultiField = Graded<FieldKind::vector>;
using FormField = Graded<FieldKind::form>;

extern template class Graded<FieldKind::vector>;
extern template class Graded<FieldKind::form>;

/// Real and imaginary parts, each with real coefficients.
std::pair<MultiField, MultiField> decompose(const MultiField& m);
std::pair<FormField, FormField> decompose(const FormField& m);

MultiField wedge(const MultiField& a, const MultiField& b);
FormField wedge(const FormField& a, const FormField& b);

/// Interior product ι_z a of a vector field into a form.
FormField contract(const MultiField& z, const FormField& a);
/// Interior product ι_α P of a one-form into a multivector, in the first slot:
/// ι_ξ(u∧v) = ξ(u) v − ξ(v) u.
MultiField contract(const FormField& alpha, const MultiField& p);

/// Complexified Schouten–Nijenhuis bracket.
MultiField schouten(const MultiField& a, const MultiField& b);
/// X(f) for a vector field X.
Poly apply(const MultiField& x, const Poly& f);

FormField d_complex(const FormField& a);
FormField lie_derivative(const MultiField& z, const FormField& a);
FormField complex_differential(const MultiField& f);
FormField complex_differential(const Poly& f);

/// m(α₁, …, α_k) for a degree-k multivector: contracts α₁ first.
Poly evaluate(const MultiField& m, const std::vector<FormField>& alphas);

}  // namespace cxp

#endif
