#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cxpoisson/geometry.hpp"
#include "generators.hpp"

using namespace cxp;
using testgen::Gen;

namespace {

const GaussScalar I = GaussScalar::i();

CMatrix mat(std::initializer_list<std::initializer_list<GaussScalar>> rows) {
    CMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
    Index r = 0;
    for (const auto& row : rows) {
        Index c = 0;
        for (const auto& v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

Poly P(const Chart& c, const std::string& s) { return Poly::parse(c, s); }

MultiField biv(const Chart& c, std::initializer_list<std::tuple<int, int, const char*>> terms) {
    MultiField m(c, 2);
    for (const auto& [i, j, s] : terms) m.add({i, j}, P(c, s));
    return m;
}

// Bivector with the given constant coefficient matrix.
ComplexBivector from_matrix(const Chart& c, const CMatrix& m) {
    MultiField b(c, 2);
    for (int i = 0; i < c.dim(); ++i)
        for (int j = i + 1; j < c.dim(); ++j) b.add({i, j}, Poly(c, m(i, j)));
    return ComplexBivector(b);
}

ComplexBivector nb() { return catalog::nb(testgen::chart_xyz(), 0, 1); }

Chart qp() { return Chart({"q", "p"}); }

}  // namespace

TEST_CASE("bivector_at examples") {
    auto parts = bivector_at(nb(), {0, 0, 0});
    CHECK(parts.pi1 == mat({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}));
    CHECK(parts.pi2 == mat({{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}));
    Chart c = testgen::chart_xyz();
    auto z = bivector_at(ComplexBivector::zero(c), {1, 2, 3});
    CHECK(z.pi1 == CMatrix::Zero(3, 3));
    CHECK(z.pi2 == CMatrix::Zero(3, 3));
    auto d = bivector_at(construct::diagonal(biv(c, {{0, 1, "z"}, {1, 2, "x^2"}})), {1, 2, 3});
    CHECK(d.pi1 == d.pi2);
    CHECK(d.pi1 != CMatrix::Zero(3, 3));
}

TEST_CASE("realified anchor matches complex multiplication") {
    Gen g(31);
    for (int t = 0; t < 40; ++t) {
        const int n = g.integer(1, 4);
        CMatrix m = g.skew(n, false);
        CMatrix xi = g.matrix(1, n, true), eta = g.matrix(1, n, true);
        CMatrix image = (xi + eta * I) * m;
        CVector col(2 * n);
        col << xi.transpose(), eta.transpose();
        CVector rho = realified_anchor({real_part(m), imag_part(m)}) * col;
        CHECK(CMatrix(rho.head(n).transpose()) == real_part(image));
        CHECK(CMatrix(rho.tail(n).transpose()) == imag_part(image));
    }
}

TEST_CASE("default grid is deterministic with nonzero coordinates") {
    auto a = default_grid(3), b = default_grid(3);
    CHECK(a.size() == 20);
    CHECK(a == b);
    for (const auto& p : a)
        for (const auto& v : p) CHECK(v != 0);
    std::set<Point> distinct(a.begin(), a.end());
    CHECK(distinct.size() == a.size());
    CHECK(default_grid(2, 7).size() == 7);
}

TEST_CASE("NB rank profile on the grid") {
    SampleReport s = sample_profiles(nb(), default_grid(3));
    for (const auto& r : s.profiles) {
        CHECK(r.dim_E == 2);
        CHECK(r.dim_Delta == 1);
        CHECK(r.real_index == 1);
        // The general formula gives the full tangent space here.
        CHECK(r.dim_D == 3);
        CHECK(r.order == 3);
        CHECK_FALSE(r.quasi_real_sample);
    }
    CHECK(s.regular);
    CHECK(s.strongly_regular);
    CHECK_FALSE(s.quasi_real);
}

TEST_CASE("imaginary symplectic bivector has real index zero") {
    Chart c = testgen::chart_n(4);
    ComplexBivector pi = construct::twist(biv(c, {{0, 1, "1"}, {2, 3, "1"}}));
    RankProfile r = rank_profile(pi, {1, 1, 1, 1});
    CHECK(r.real_index == 0);
    CHECK(r.dim_E == 4);
    CHECK(r.quasi_real_sample);
}

TEST_CASE("real index agrees three ways") {
    Gen g(32);
    for (int t = 0; t < 100; ++t) {
        const int n = g.integer(2, 3);
        Chart c = testgen::chart_n(n);
        CMatrix m = g.skew(n, false, 0.4);
        ComplexBivector pi = from_matrix(c, m);
        Point p = g.point(n);
        const Index nullity = n - rank(CMatrix(imag_part(m)));
        CHECK(rank_profile(pi, p).real_index == nullity);
        CHECK(real_part_of(graph(m, GraphKind::bivector)).dim() == nullity);
    }
    for (const auto& p : default_grid(3)) {
        CMatrix m = coefficient_matrix_at(nb(), p);
        CHECK(indices(graph(m, GraphKind::bivector)).real_index == rank_profile(nb(), p).real_index);
    }
}

TEST_CASE("Δ ⊆ D on random polynomial bivectors") {
    Gen g(33);
    for (int t = 0; t < 60; ++t) {
        const int n = g.integer(2, 4);
        Chart c = testgen::chart_n(n);
        ComplexBivector pi(g.multi(c, 2, 2));
        Point p = g.point(n);
        RankProfile r = rank_profile(pi, p);
        CHECK(r.dim_Delta <= r.dim_D);
        CHECK(r.dim_D <= n);
        CHECK(r.dim_Delta <= r.dim_E);
        CMatrix e = row_span(coefficient_matrix_at(pi, p));
        CHECK(span_contains(real_projection(e), real_slice(e)));
    }
}

TEST_CASE("A_π by preimage and by annihilator") {
    Chart c = testgen::chart_xyz();
    APi origin = a_pi_at(nb(), {0, 0, 0});
    CHECK(origin.routes_agree());
    // ξ₁ = η₁ = 0 and ξ₃ = −η₂ by hand.
    CHECK(origin.preimage_route.dim() == 3);
    for (const auto& p : default_grid(3)) CHECK(a_pi_at(nb(), p).routes_agree());

    APi zero = a_pi_at(ComplexBivector::zero(c), {1, 2, 3});
    CHECK(zero.preimage_route.dim() == 6);
    CHECK(zero.routes_agree());

    // Totally real π: A_π = ℝⁿ ⊕ ker π₁ (η must lie in ker π₁).
    ComplexBivector real = construct::complexify(biv(c, {{0, 1, "1"}, {1, 2, "y"}}));
    for (const auto& p : default_grid(3, 5)) {
        APi a = a_pi_at(real, p);
        CHECK(a.routes_agree());
        CHECK(a.preimage_route.dim() == 3 + 1);
    }

    Gen g(34);
    for (int t = 0; t < 60; ++t) {
        const int n = g.integer(1, 4);
        Chart cn = testgen::chart_n(n);
        ComplexBivector pi(g.multi(cn, 2, 1));
        CHECK(a_pi_at(pi, g.point(n)).routes_agree());
    }
}

TEST_CASE("presymplectic data examples") {
    Chart c = qp();
    PresymplecticData s = presymplectic_at(construct::complexify(biv(c, {{0, 1, "1"}})), {2, 3});
    CHECK(s.delta.dim() == 2);
    CHECK(s.omega_re == mat({{0, 1}, {-1, 0}}));
    CHECK(s.omega_im == CMatrix::Zero(2, 2));
    CHECK(s.well_defined);
    CHECK(s.parts_match);

    for (const auto& p : default_grid(3, 5)) {
        PresymplecticData d = presymplectic_at(nb(), p);
        CHECK(d.delta.dim() == 1);
        CHECK(d.omega_re == CMatrix::Zero(1, 1));
        CHECK(d.omega_im == CMatrix::Zero(1, 1));
    }

    PresymplecticData diag = presymplectic_at(construct::diagonal(biv(c, {{0, 1, "1"}})), {1, 1});
    CHECK(diag.omega_im == CMatrix(-diag.omega_re));
    CHECK(diag.omega_re == mat({{0, Rational(1, 2)}, {Rational(-1, 2), 0}}));
}

TEST_CASE("presymplectic data does not depend on the preimage") {
    Gen g(35);
    int nontrivial = 0;
    for (int t = 0; t < 80; ++t) {
        const int n = g.integer(2, 4);
        Chart c = testgen::chart_n(n);
        ComplexBivector pi(g.multi(c, 2, 1));
        PresymplecticData d = presymplectic_at(pi, g.point(n));
        CHECK(d.well_defined);
        CHECK(d.parts_match);
        CHECK(is_skew(d.omega_re));
        CHECK(is_skew(d.omega_im));
        CHECK(is_real(d.omega_re));
        CHECK(is_real(d.omega_im));
        if (d.delta.dim() >= 2) ++nontrivial;
    }
    CHECK(nontrivial > 5);
}

TEST_CASE("hat sign check") {
    Chart c = qp();
    HatSignCheck s = hat_sign_check(construct::complexify(biv(c, {{0, 1, "1"}})), {1, 2});
    CHECK(s.holds());
    // hat(gr σ_ℂ) = gr 0, so ε_hat vanishes while ω_re = dq∧dp: the ω_re relation belongs to check.
    CHECK_FALSE(s.literal_ok);
    CHECK(s.eps_hat == CMatrix::Zero(2, 2));
    CHECK(hat_sign_check(ComplexBivector::zero(c), {1, 2}).holds());
    for (const auto& p : default_grid(3, 5)) CHECK(hat_sign_check(nb(), p).holds());

    // Imaginary symplectic bivector: the form moves into ε_hat and ω_re = 0.
    HatSignCheck im = hat_sign_check(construct::twist(biv(c, {{0, 1, "1"}})), {1, 2});
    CHECK(im.holds());
    CHECK_FALSE(im.literal_ok);

    Gen g(36);
    for (int t = 0; t < 60; ++t) {
        const int n = g.integer(2, 4);
        Chart cn = testgen::chart_n(n);
        ComplexBivector pi(g.multi(cn, 2, 1));
        CHECK(hat_sign_check(pi, g.point(n)).holds());
    }
}

TEST_CASE("generalized complex matrix") {
    Chart c = testgen::chart_n(4);
    CMatrix sigma = mat({{0, 2, 0, 0}, {-2, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
    GcsData g0 = gcs_matrix(CMatrix::Zero(4, 4), sigma);
    CMatrix expected = CMatrix::Zero(8, 8);
    expected.topRightCorner(4, 4) = sigma;
    expected.bottomLeftCorner(4, 4) = -*inverse(sigma);
    CHECK(g0.j == expected);
    CHECK(g0.sigma == sigma);

    Gen g(37);
    int done = 0;
    while (done < 100) {
        const int n = 2 * g.integer(2, 3);
        CMatrix p1 = g.skew(n, true), p2 = g.skew(n, true, 0.2);
        if (!inverse(p2)) continue;
        ++done;
        GcsData d = gcs_matrix(p1, p2);
        CHECK(squares_to_minus_identity(d.j));
        CHECK(preserves_pairing(d.j));
        CHECK(plus_i_eigenspace(d.j) == graph(CMatrix(p1 + p2 * I), GraphKind::bivector));
        CHECK(is_skew(d.sigma));
    }
    CHECK_THROWS_AS(gcs_matrix(nb(), {1, 1, 1}), SingularImaginaryPart);
    ComplexBivector pi = construct::twist(biv(c, {{0, 1, "2"}, {2, 3, "1"}}));
    CHECK(gcs_matrix(pi, {1, 2, 3, 4}).j == expected);
}

TEST_CASE("tilde of the graph is L(Δ, −Ω)") {
    for (const auto& p : default_grid(3, 10)) CHECK(tilde_foliation_check(nb(), p).holds());
    Chart c = testgen::chart_xyz();
    ComplexBivector real = construct::complexify(biv(c, {{0, 1, "1"}, {1, 2, "y"}}));
    ComplexBivector diag = construct::diagonal(biv(c, {{0, 1, "z"}, {0, 2, "1"}}));
    for (const auto& p : default_grid(3, 5)) {
        CHECK(tilde_foliation_check(real, p).holds());
        TildeFoliation d = tilde_foliation_check(diag, p);
        CHECK(d.holds());
        // Quasi-real: tilde fixes the graph itself.
        CHECK(d.tilde == graph(coefficient_matrix_at(diag, p), GraphKind::bivector));
    }
    Gen g(38);
    for (int t = 0; t < 60; ++t) {
        const int n = g.integer(1, 4);
        Chart cn = testgen::chart_n(n);
        ComplexBivector pi(g.multi(cn, 2, 1));
        CHECK(tilde_foliation_check(pi, g.point(n)).holds());
    }
}

TEST_CASE("involutivity of image distributions") {
    ComplexBivector pi = nb();
    auto pts = default_grid(3, 5);
    InvolutivityReport r1 = involutivity_sample(image_generators(pi.pi1()), pts);
    CHECK_FALSE(r1.involutive());
    InvolutivityReport r2 = involutivity_sample(image_generators(pi.pi2()), pts);
    CHECK_FALSE(r2.involutive());
    // [∂y, −∂x + y∂z] = ∂z leaves the plane.
    bool found = false;
    for (const auto& f : r1.failures)
        if (f.i == 0 && f.j == 1) {
            found = true;
            CHECK(f.bracket == MultiField::coordinate(pi.chart(), 2));
        }
    CHECK(found);

    Chart c = pi.chart();
    std::vector<MultiField> coords = {MultiField::coordinate(c, 0), MultiField::coordinate(c, 1)};
    CHECK(involutivity_sample(coords, pts).involutive());
    std::vector<MultiField> twisted = {MultiField::coordinate(c, 0),
                                       P(c, "x") * MultiField::coordinate(c, 1)};
    CHECK(involutivity_sample(twisted, pts).involutive());
}

TEST_CASE("Poisson–Nijenhuis pairs with N² = λ are quasi-real") {
    Chart c = testgen::chart_n(4);
    MultiField sigma = biv(c, {{0, 1, "x2"}, {2, 3, "1"}});
    for (int k : {1, 2, 3}) {
        PolyMatrix n(c, 4, 4);
        for (int d = 0; d < 4; ++d) n(d, d) = Poly(c, GaussScalar(d < 2 ? k : -k));
        ComplexBivector pi = construct::nijenhuis(sigma, n);
        SampleReport s = sample_profiles(pi, default_grid(4));
        CHECK(s.quasi_real);
        for (const auto& r : s.profiles) {
            // Δ = (N² + Id)(im σ♯), which is im σ♯ since N² is a positive multiple of Id.
            CMatrix delta = real_slice(row_span(coefficient_matrix_at(pi, r.point)));
            CMatrix im_sigma = row_span(coefficient_matrix_at(construct::complexify(sigma), r.point));
            CHECK(same_span(delta, im_sigma));
        }
    }
}
