#include "cxpoisson/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace cxp {

Chart::Chart(std::vector<std::string> vars) {
    if (vars.empty()) throw std::invalid_argument("chart needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
            throw std::invalid_argument("bad variable name '" + v + "'");
        for (char c : v)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw std::invalid_argument("bad variable name '" + v + "'");
        if (v == "i") throw std::invalid_argument("'i' is reserved for the imaginary unit");
        if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable '" + v + "'");
    }
    vars_ = std::make_shared<const std::vector<std::string>>(std::move(vars));
}

const std::vector<std::string>& Chart::vars() const {
    static const std::vector<std::string> empty;
    return vars_ ? *vars_ : empty;
}

int Chart::index(const std::string& name) const {
    const auto& v = vars();
    auto it = std::find(v.begin(), v.end(), name);
    if (it == v.end()) throw UnknownVariable("unknown variable '" + name + "'");
    return static_cast<int>(it - v.begin());
}

bool Chart::contains(const std::string& name) const {
    const auto& v = vars();
    return std::find(v.begin(), v.end(), name) != v.end();
}

Point to_point(const Chart& chart, const PointMap& values) {
    Point p;
    p.reserve(static_cast<std::size_t>(chart.dim()));
    for (const auto& name : chart.vars()) {
        auto it = values.find(name);
        if (it == values.end()) throw MissingVariable("point has no value for '" + name + "'");
        p.push_back(it->second);
    }
    for (const auto& [name, value] : values) (void)chart.index(name);
    return p;
}

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    // Among equal degrees, x > y > z in lex order, so x^2 prints before x*y.
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly::Poly(Chart chart, const GaussScalar& c) : chart_(std::move(chart)) {
    if (!c.is_zero()) terms_.emplace(Exponent(static_cast<std::size_t>(chart_.dim()), 0u), c);
}

Poly Poly::variable(const Chart& chart, int k) {
    Exponent e(static_cast<std::size_t>(chart.dim()), 0u);
    e.at(static_cast<std::size_t>(k)) = 1;
    return monomial(chart, e, GaussScalar(1));
}

Poly Poly::variable(const Chart& chart, const std::string& name) {
    return variable(chart, chart.index(name));
}

Poly Poly::monomial(const Chart& chart, const Exponent& e, const GaussScalar& c) {
    if (e.size() != static_cast<std::size_t>(chart.dim()))
        throw std::invalid_argument("exponent length does not match chart");
    Poly p(chart);
    p.add_term(e, c);
    return p;
}

void Poly::add_term(const Exponent& e, const GaussScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::require_same_chart(const Poly& o) const {
    if (chart_.dim() != 0 && o.chart_.dim() != 0 && chart_ != o.chart_)
        throw ChartMismatch("polynomials live on different charts");
}

bool Poly::is_real() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

bool Poly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](unsigned x) { return x == 0; }));
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exponent& e = terms_.rbegin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

GaussScalar Poly::constant_term() const {
    if (terms_.empty()) return {};
    const auto& [e, c] = *terms_.begin();
    for (unsigned x : e)
        if (x != 0) return {};
    return c;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_chart(o);
    if (chart_.dim() == 0) chart_ = o.chart_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_chart(o);
    if (chart_.dim() == 0) chart_ = o.chart_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.require_same_chart(b);
    Poly r(a.chart_.dim() != 0 ? a.chart_ : b.chart_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e(ea.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const GaussScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
}

Poly Poly::partial(int k) const {
    if (k < 0 || k >= chart_.dim()) throw UnknownVariable("variable index out of range");
    Poly r(chart_);
    auto kk = static_cast<std::size_t>(k);
    for (const auto& [e, c] : terms_) {
        if (e[kk] == 0) continue;
        Exponent f = e;
        f[kk] -= 1;
        r.add_term(f, c * GaussScalar(static_cast<long>(e[kk])));
    }
    return r;
}

GaussScalar Poly::eval(const Point& p) const {
    if (p.size() != static_cast<std::size_t>(chart_.dim()) && !terms_.empty())
        throw MissingVariable("point dimension does not match chart");
    GaussScalar sum;
    for (const auto& [e, c] : terms_) {
        Rational m = 1;
        for (std::size_t k = 0; k < e.size(); ++k)
            for (unsigned j = 0; j < e[k]; ++j) m *= p[k];
        sum += c * GaussScalar(m);
    }
    return sum;
}

Poly Poly::substitute(const std::map<int, Rational>& values) const {
    Poly r(chart_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        Rational m = 1;
        for (const auto& [k, v] : values) {
            auto kk = static_cast<std::size_t>(k);
            for (unsigned j = 0; j < e.at(kk); ++j) m *= v;
            f[kk] = 0;
        }
        r.add_term(f, c * GaussScalar(m));
    }
    return r;
}

Poly Poly::conj() const {
    Poly r = *this;
    for (auto& [e, v] : r.terms_) v = v.conj();
    return r;
}

Poly Poly::real_part() const {
    Poly r(chart_);
    for (const auto& [e, c] : terms_) r.add_term(e, GaussScalar(c.re()));
    return r;
}

Poly Poly::imag_part() const {
    Poly r(chart_);
    for (const auto& [e, c] : terms_) r.add_term(e, GaussScalar(c.im()));
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += chart_.var(static_cast<int>(k));
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        GaussScalar coef = c;
        bool negative = false;
        if (coef.is_real() && coef.re() < 0) {
            negative = true;
            coef = -coef;
        } else if (sgn(coef.re()) == 0 && coef.im() < 0) {
            negative = true;
            coef = -coef;
        }
        std::string cs;
        if (mono.empty())
            cs = coef.str();
        else if (coef == GaussScalar(1))
            cs = mono;
        else
            cs = coef.str() + "*" + mono;
        if (first)
            out += negative ? "-" + cs : cs;
        else
            out += negative ? " - " + cs : " + " + cs;
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

namespace {

// Recursive-descent parser for: expr := term (('+'|'-') term)*
// term := unary (['*'] unary)*   unary := ('-'|'+') unary | power
// power := atom ('^' integer)?   atom := number | 'i' | variable | '(' expr ')'
class Parser {
public:
    Parser(const Chart& chart, const std::string& text) : chart_(chart), s_(text) {}

    Poly parse() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("empty polynomial", pos_ + 1);
        Poly p = expr();
        skip();
        if (pos_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_ + 1);
        return p;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_atom() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = unary();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc = acc * unary();
            } else if (starts_atom()) {
                acc = acc * unary();
            } else {
                return acc;
            }
        }
    }

    Poly unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    Poly power() {
        Poly base = atom();
        if (!peek('^')) return base;
        ++pos_;
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("exponent must be a nonnegative integer", pos_ + 1);
        unsigned long n = std::stoul(s_.substr(start, pos_ - start));
        Poly r(chart_, GaussScalar(1));
        for (unsigned long k = 0; k < n; ++k) r = r * base;
        return r;
    }

    Poly atom() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_ + 1);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!peek(')')) throw ParseError("expected ')'", pos_ + 1);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string num = s_.substr(start, pos_ - start);
            if (pos_ < s_.size() && s_[pos_] == '/') {
                std::size_t slash = pos_++;
                std::size_t dstart = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (dstart == pos_) throw ParseError("expected denominator", slash + 2);
                std::string den = s_.substr(dstart, pos_ - dstart);
                if (mpz_class(den) == 0) throw ParseError("zero denominator", dstart + 1);
                num += "/" + den;
            }
            return Poly(chart_, GaussScalar(parse_rational(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (name == "i") return Poly(chart_, GaussScalar::i());
            if (!chart_.contains(name))
                throw ParseError("unknown variable '" + name + "'", start + 1);
            return Poly::variable(chart_, name);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_ + 1);
    }

    const Chart& chart_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(const Chart& chart, const std::string& text) { return Parser(chart, text).parse(); }

}  // namespace cxp
