#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cxpoisson/multivector.hpp"
#include "generators.hpp"

using namespace cxp;
using testgen::Gen;

namespace {

const GaussScalar I = GaussScalar::i();

Chart xyz() { return testgen::chart_xyz(); }
Poly P(const Chart& c, const std::string& s) { return Poly::parse(c, s); }

MultiField vec(const Chart& c, std::initializer_list<const char*> comps) {
    std::vector<Poly> v;
    for (const char* s : comps) v.push_back(P(c, s));
    return MultiField::from_components(c, v);
}

FormField one_form(const Chart& c, std::initializer_list<const char*> comps) {
    std::vector<Poly> v;
    for (const char* s : comps) v.push_back(P(c, s));
    return FormField::from_components(c, v);
}

MultiField dd(const Chart& c, int k) { return MultiField::coordinate(c, k); }
FormField dx(const Chart& c, int k) { return FormField::coordinate(c, k); }

// Vector-field bracket from its definition [X,Y]^k = X(Y^k) − Y(X^k).
MultiField lie_bracket_oracle(const MultiField& x, const MultiField& y) {
    std::vector<Poly> comps;
    for (int k = 0; k < x.chart().dim(); ++k) comps.push_back(apply(x, y.coeff(k)) - apply(y, x.coeff(k)));
    return MultiField::from_components(x.chart(), comps);
}

int sgn_pow(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

TEST_CASE("index tuples are sign-normalized") {
    Chart c = xyz();
    MultiField m(c, 2);
    m.add({1, 0}, P(c, "x"));
    CHECK(m.coeff({0, 1}) == P(c, "-x"));
    m.add({0, 0}, P(c, "1"));
    CHECK(m.comps().size() == 1);
    m.add({0, 1}, P(c, "x"));
    CHECK(m.is_zero());
}

TEST_CASE("decompose") {
    Chart c = xyz();
    MultiField m(c, 2);
    m.add({0, 1}, P(c, "z"));
    m.add({1, 2}, P(c, "i*x"));
    auto [re, im] = decompose(m);
    MultiField e1(c, 2), e2(c, 2);
    e1.add({0, 1}, P(c, "z"));
    e2.add({1, 2}, P(c, "x"));
    CHECK(re == e1);
    CHECK(im == e2);
    CHECK(re + im * I == m);

    MultiField k(c, 2);
    k.add({0, 1}, P(c, "2+3*i"));
    auto [kr, ki] = decompose(k);
    CHECK(kr.coeff({0, 1}) == P(c, "2"));
    CHECK(ki.coeff({0, 1}) == P(c, "3"));
    CHECK(decompose(e1).second.is_zero());
}

TEST_CASE("wedge") {
    Chart c = xyz();
    CHECK(wedge(dd(c, 0), dd(c, 0)).is_zero());
    FormField w = wedge(dx(c, 0), dx(c, 1));
    CHECK(w.degree() == 2);
    CHECK(w.coeff({0, 1}) == P(c, "1"));
    // (dx + i dy)∧(dx − i dy) = −i dx∧dy + i dy∧dx = −2i dx∧dy
    FormField a = dx(c, 0) + dx(c, 1) * I, b = dx(c, 0) - dx(c, 1) * I;
    FormField expect(c, 2);
    expect.add({0, 1}, Poly(c, GaussScalar(0, -2)));
    CHECK(wedge(a, b) == expect);
    CHECK_THROWS_AS(wedge(dx(c, 0), dx(Chart({"u", "v", "w"}), 0)), ChartMismatch);
}

TEST_CASE("contraction") {
    Chart c = xyz();
    FormField w = wedge(dx(c, 0), dx(c, 1));
    CHECK(contract(dd(c, 0), w) == dx(c, 1));
    // ι_{∂x+i∂y}(dx∧dy) = dy − i dx
    CHECK(contract(dd(c, 0) + dd(c, 1) * I, w) == dx(c, 1) - dx(c, 0) * I);
    CHECK(contract(dd(c, 2), w).is_zero());
    CHECK_THROWS(contract(dd(c, 0), FormField::function(P(c, "x"))));
    // one-form into bivector follows (u∧v)♯(ξ) = ξ(u)v − ξ(v)u
    MultiField pi = wedge(dd(c, 0), dd(c, 1));
    CHECK(contract(dx(c, 0), pi) == dd(c, 1));
    CHECK(contract(dx(c, 1), pi) == -dd(c, 0));
}

TEST_CASE("schouten examples") {
    Chart c = xyz();
    CHECK(schouten(dd(c, 0), dd(c, 1)).is_zero());
    CHECK(schouten(P(c, "x") * dd(c, 0), dd(c, 0)) == -dd(c, 0));
    MultiField pi(c, 2);
    pi.add({0, 1}, P(c, "z"));
    pi.add({1, 2}, P(c, "i*x"));
    CHECK(schouten(pi, pi).is_zero());
    MultiField f = MultiField::function(P(c, "x^2*y")), g = MultiField::function(P(c, "z"));
    CHECK(schouten(f, g).is_zero());
    MultiField X = vec(c, {"y", "i*x", "1"});
    CHECK(schouten(X, f) == MultiField::function(apply(X, P(c, "x^2*y"))));
}

TEST_CASE("exterior derivative") {
    Chart c = xyz();
    FormField a = P(c, "x") * dx(c, 1) + P(c, "i*y") * dx(c, 0);
    FormField expect(c, 2);
    expect.add({0, 1}, P(c, "1-i"));
    CHECK(d_complex(a) == expect);
    CHECK(d_complex(dx(c, 0)).is_zero());
    Chart qp({"q", "p"});
    FormField xi = P(qp, "q") * dx(qp, 1) - P(qp, "p") * dx(qp, 0);
    FormField two(qp, 2);
    two.add({0, 1}, P(qp, "2"));
    CHECK(d_complex(xi) == two);
}

TEST_CASE("Lie derivative examples") {
    Chart c = xyz();
    FormField a = P(c, "x") * dx(c, 1);
    CHECK(lie_derivative(dd(c, 0), a) == dx(c, 1));
    CHECK(lie_derivative(dd(c, 0) * I, a) == dx(c, 1) * I);
    FormField b = P(c, "x") * dx(c, 0) + P(c, "y") * dx(c, 1);
    CHECK(lie_derivative(dd(c, 0) + dd(c, 1) * I, b) == dx(c, 0) + dx(c, 1) * I);
}

TEST_CASE("complex differential") {
    Chart c = xyz();
    CHECK(complex_differential(MultiField::function(P(c, "x+i*y"))) == dx(c, 0) + dx(c, 1) * I);
    CHECK(complex_differential(P(c, "3+i")).is_zero());
    CHECK(complex_differential(P(c, "x*y")) == one_form(c, {"y", "x", "0"}));
    Gen g(5);
    for (int t = 0; t < 30; ++t) {
        Poly f = g.poly(c, 3, 4);
        CHECK(complex_differential(f) == d_complex(FormField::function(f)));
    }
}

TEST_CASE("property: degree-1 schouten is the vector-field bracket") {
    Gen g(6);
    Chart c = xyz();
    for (int t = 0; t < 100; ++t) {
        MultiField X = g.multi(c, 1, 2), Y = g.multi(c, 1, 2);
        CHECK(schouten(X, Y) == lie_bracket_oracle(X, Y));
    }
}

TEST_CASE("property: graded antisymmetry and graded Jacobi") {
    Gen g(7);
    Chart c = xyz();
    for (int t = 0; t < 60; ++t) {
        int p = g.integer(0, 2), q = g.integer(0, 2), r = g.integer(0, 2);
        MultiField A = g.multi(c, p, 2), B = g.multi(c, q, 2), C = g.multi(c, r, 2);
        MultiField ab = schouten(A, B), ba = schouten(B, A);
        if (p + q >= 1) CHECK(ab == ba * GaussScalar(-sgn_pow((p - 1) * (q - 1))));
        if (p + q + r < 2) continue;
        MultiField j1 = schouten(A, schouten(B, C)) * GaussScalar(sgn_pow((p - 1) * (r - 1)));
        MultiField j2 = schouten(B, schouten(C, A)) * GaussScalar(sgn_pow((q - 1) * (p - 1)));
        MultiField j3 = schouten(C, schouten(A, B)) * GaussScalar(sgn_pow((r - 1) * (q - 1)));
        // Brackets that would land in degree −1 are zero and carry a placeholder degree.
        MultiField sum(c, p + q + r - 2);
        for (const MultiField* j : {&j1, &j2, &j3})
            if (!j->is_zero()) sum += *j;
        CHECK(sum.is_zero());
    }
}

TEST_CASE("property: Leibniz rule of the Schouten bracket") {
    // [A, B∧C] = [A,B]∧C + (−1)^{(a−1)b} B∧[A,C]
    Gen g(8);
    Chart c = xyz();
    for (int t = 0; t < 60; ++t) {
        int a = g.integer(1, 2), b = g.integer(1, 2);
        MultiField A = g.multi(c, a, 2), B = g.multi(c, b, 1), C = g.multi(c, 1, 1);
        if (b + 1 > 3) continue;
        MultiField lhs = schouten(A, wedge(B, C));
        MultiField rhs = wedge(schouten(A, B), C) + wedge(B, schouten(A, C)) * GaussScalar(sgn_pow((a - 1) * b));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("property: d∘d = 0") {
    Gen g(9);
    Chart c = xyz();
    for (int t = 0; t < 100; ++t) {
        FormField a = g.form(c, g.integer(0, 2), 3);
        CHECK(d_complex(d_complex(a)).is_zero());
    }
}

TEST_CASE("property: Cartan magic formula and the real/imaginary expansion") {
    Gen g(10);
    Chart c = xyz();
    for (int t = 0; t < 100; ++t) {
        MultiField z = g.multi(c, 1, 2);
        FormField a = g.form(c, g.integer(0, 3), 2);
        FormField cartan = (a.degree() > 0 ? d_complex(contract(z, a)) : FormField(c, a.degree())) +
                           contract(z, d_complex(a));
        CHECK(lie_derivative(z, a) == cartan);
        auto [x, y] = decompose(z);
        auto [b1, b2] = decompose(a);
        FormField four = lie_derivative(x, b1) - lie_derivative(y, b2) +
                         (lie_derivative(x, b2) + lie_derivative(y, b1)) * I;
        CHECK(lie_derivative(z, a) == four);
    }
}

TEST_CASE("property: multivector evaluated on differentials matches the bracket operator") {
    // Λ_m(f, g) = Σ_{i<j} m_ij (∂_i f ∂_j g − ∂_j f ∂_i g), written out from the components.
    Gen g(12);
    Chart c = xyz();
    for (int t = 0; t < 100; ++t) {
        MultiField m = g.multi(c, 2, 2);
        Poly f = g.poly(c, 2, 3), h = g.poly(c, 2, 3);
        Poly oracle(c);
        for (const auto& [idx, coef] : m.comps())
            oracle += coef * (f.partial(idx[0]) * h.partial(idx[1]) - f.partial(idx[1]) * h.partial(idx[0]));
        CHECK(evaluate(m, {complex_differential(f), complex_differential(h)}) == oracle);
    }
}

TEST_CASE("property: wedge is graded commutative and associative") {
    Gen g(13);
    Chart c = testgen::chart_n(4);
    for (int t = 0; t < 60; ++t) {
        int p = g.integer(0, 2), q = g.integer(0, 2);
        FormField a = g.form(c, p, 1), b = g.form(c, q, 1), e = g.form(c, 1, 1);
        CHECK(wedge(a, b) == wedge(b, a) * GaussScalar(sgn_pow(p * q)));
        CHECK(wedge(wedge(a, b), e) == wedge(a, wedge(b, e)));
    }
}
