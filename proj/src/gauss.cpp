#include "cxpoisson/gauss.hpp"

#include <ostream>
#include <stdexcept>

namespace cxp {

GaussScalar GaussScalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Rational n = re_ * re_ + im_ * im_;
    return {Rational(re_ / n), Rational(-im_ / n)};
}

GaussScalar& GaussScalar::operator+=(const GaussScalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussScalar& GaussScalar::operator-=(const GaussScalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussScalar& GaussScalar::operator*=(const GaussScalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

GaussScalar& GaussScalar::operator/=(const GaussScalar& o) {
    if (o.is_real()) {
        if (sgn(o.re_) == 0) throw std::domain_error("division by zero");
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string GaussScalar::str() const {
    if (sgn(im_) == 0) return rational_str(re_);
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = rational_str(im_) + "*i";
    if (sgn(re_) == 0) return imag;
    std::string s = "(" + rational_str(re_);
    if (imag[0] != '-') s += "+";
    return s + imag + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussScalar& z) { return os << z.str(); }

}  // namespace cxp
