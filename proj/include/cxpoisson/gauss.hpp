#ifndef CXPOISSON_GAUSS_HPP
#define CXPOISSON_GAUSS_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <iosfwd>
#include <string>

namespace cxp {

using Rational = mpq_class;

/// Exact complex number with rational real and imaginary parts.
/// Both parts are kept canonical (lowest terms, positive denominator) by GMP.
class GaussScalar {
public:
    GaussScalar() = default;
    GaussScalar(int v) : re_(v) {}
    GaussScalar(long v) : re_(v) {}
    GaussScalar(const Rational& re) : re_(re) { re_.canonicalize(); }
    GaussScalar(const Rational& re, const Rational& im) : re_(re), im_(im) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussScalar i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussScalar conj() const { return {re_, Rational(-im_)}; }
    /// Multiplicative inverse; throws std::domain_error on zero.
    GaussScalar inverse() const;

    GaussScalar& operator+=(const GaussScalar& o);
    GaussScalar& operator-=(const GaussScalar& o);
    GaussScalar& operator*=(const GaussScalar& o);
    GaussScalar& operator/=(const GaussScalar& o);

    friend GaussScalar operator+(GaussScalar a, const GaussScalar& b) { return a += b; }
    friend GaussScalar operator-(GaussScalar a, const GaussScalar& b) { return a -= b; }
    friend GaussScalar operator*(GaussScalar a, const GaussScalar& b) { return a *= b; }
    friend GaussScalar operator/(GaussScalar a, const GaussScalar& b) { return a /= b; }
    GaussScalar operator-() const { return {Rational(-re_), Rational(-im_)}; }
    GaussScalar operator+() const { return *this; }

    friend bool operator==(const GaussScalar& a, const GaussScalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussScalar& a, const GaussScalar& b) { return !(a == b); }

    /// Text form accepted back by the polynomial parser: "3/2", "-i", "(1+2*i)".
    std::string str() const;
    /// True when str() needs parentheses to act as a product factor.
    bool needs_parens() const { return !is_zero() && sgn(re_) != 0 && sgn(im_) != 0; }

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussScalar& z);

std::string rational_str(const Rational& q);
/// Parses "p" or "p/q" (optional sign); throws std::invalid_argument.
Rational parse_rational(const std::string& text);

inline GaussScalar conj(const GaussScalar& z) { return z.conj(); }

}  // namespace cxp

namespace Eigen {

template <>
struct NumTraits<cxp::GaussScalar> : GenericNumTraits<cxp::GaussScalar> {
    using Real = cxp::GaussScalar;
    using NonInteger = cxp::GaussScalar;
    using Nested = cxp::GaussScalar;
    using Literal = cxp::GaussScalar;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 8,
        MulCost = 16
    };
    // Exact type: stream printing of matrices only needs these to exist.
    static int digits10() { return 0; }
    static int max_digits10() { return 0; }
};

}  // namespace Eigen

#endif
