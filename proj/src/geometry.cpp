#include "cxpoisson/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cxp {

namespace {

const GaussScalar I = GaussScalar::i();

CMatrix eval_vector_fields(const std::vector<MultiField>& fields, int n, const Point& p) {
    CMatrix rows = CMatrix::Zero(static_cast<Index>(fields.size()), n);
    for (std::size_t r = 0; r < fields.size(); ++r)
        for (const auto& [idx, v] : fields[r].eval(p)) rows(static_cast<Index>(r), idx[0]) = v;
    return rows;
}

template <typename F>
Index modal(const std::vector<RankProfile>& ps, F&& field) {
    std::map<Index, int> counts;
    for (const auto& p : ps) ++counts[field(p)];
    return std::max_element(counts.begin(), counts.end(),
                            [](const auto& a, const auto& b) { return a.second < b.second; })
        ->first;
}

// Ω, ω_re, ω_im on the rows of delta from preimages chosen with the given pivot order.
struct Forms {
    CMatrix omega, re, im;
};

Forms forms_on(const CMatrix& p, const CMatrix& delta, PivotOrder order) {
    const Index k = delta.rows();
    const CMatrix p1 = real_part(p), p2 = imag_part(p);
    std::vector<CVector> xi, eta, alpha;
    CMatrix pt = p.transpose();
    for (Index a = 0; a < k; ++a) {
        auto sol = solve<GaussScalar>(pt, delta.row(a).transpose(), order);
        if (!sol) throw std::logic_error("Δ vector outside the image of π♯");
        alpha.push_back(*sol);
        xi.push_back(real_part(*sol));
        eta.push_back(imag_part(*sol));
    }
    Forms f{CMatrix(k, k), CMatrix(k, k), CMatrix(k, k)};
    for (Index a = 0; a < k; ++a)
        for (Index b = 0; b < k; ++b) {
            const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
            f.omega(a, b) = (alpha[ua].transpose() * p * alpha[ub])(0, 0);
            f.re(a, b) = (xi[ua].transpose() * p1 * xi[ub] + eta[ua].transpose() * p1 * eta[ub])(0, 0);
            f.im(a, b) = -(xi[ua].transpose() * p2 * xi[ub] + eta[ua].transpose() * p2 * eta[ub])(0, 0);
        }
    return f;
}

}  // namespace

CMatrix coefficient_matrix_at(const ComplexBivector& pi, const Point& p) {
    const int n = pi.dim();
    CMatrix m = CMatrix::Zero(n, n);
    for (const auto& [idx, v] : pi.body().eval(p)) {
        m(idx[0], idx[1]) = v;
        m(idx[1], idx[0]) = -v;
    }
    return m;
}

BivectorParts bivector_at(const ComplexBivector& pi, const Point& p) {
    CMatrix m = coefficient_matrix_at(pi, p);
    return {real_part(m), imag_part(m)};
}

CMatrix realified_anchor(const BivectorParts& parts) {
    const Index n = parts.pi1.rows();
    // Row convention: ξ ↦ ξP, so the column-vector matrix uses transposes.
    CMatrix m(2 * n, 2 * n);
    m.topLeftCorner(n, n) = parts.pi1.transpose();
    m.topRightCorner(n, n) = -parts.pi2.transpose();
    m.bottomLeftCorner(n, n) = parts.pi2.transpose();
    m.bottomRightCorner(n, n) = parts.pi1.transpose();
    return m;
}

RankProfile rank_profile(const ComplexBivector& pi, const Point& p) {
    CMatrix m = coefficient_matrix_at(pi, p);
    CMatrix e = row_span(m);
    RankProfile r;
    r.point = p;
    r.dim_E = e.rows();
    r.dim_Delta = real_slice(e).rows();
    r.dim_D = real_projection(e).rows();
    r.real_index = m.cols() - rank(CMatrix(imag_part(m)));
    r.order = r.dim_D;
    r.quasi_real_sample = r.dim_Delta == r.dim_D;
    return r;
}

SampleReport sample_profiles(const ComplexBivector& pi, const std::vector<Point>& points) {
    SampleReport s;
    for (const auto& p : points) s.profiles.push_back(rank_profile(pi, p));
    if (s.profiles.empty()) return s;
    const Index e = modal(s.profiles, [](const RankProfile& r) { return r.dim_E; });
    const Index d = modal(s.profiles, [](const RankProfile& r) { return r.dim_Delta; });
    const Index dd = modal(s.profiles, [](const RankProfile& r) { return r.dim_D; });
    for (auto& r : s.profiles) {
        r.regular_sample = r.dim_E == e;
        r.strongly_regular_sample = r.regular_sample && r.dim_Delta == d && r.dim_D == dd;
        s.regular = s.regular && r.regular_sample;
        s.strongly_regular = s.strongly_regular && r.strongly_regular_sample;
        s.quasi_real = s.quasi_real && r.quasi_real_sample;
    }
    return s;
}

std::vector<Point> default_grid(int dim, int size) {
    // ℝ⁰ has a single point.
    if (dim == 0) return {Point{}};
    std::vector<Point> out;
    std::set<Point> seen;
    for (int k = 0; static_cast<int>(out.size()) < size; ++k) {
        Point p;
        for (int j = 0; j < dim; ++j) {
            const long num = (3L * k + 5L * j + 1) % 7 + 1;
            const long den = (k + 2L * j) % 3 + 1;
            p.emplace_back(Rational(((k + j) % 2 ? -num : num), den));
            p.back().canonicalize();
        }
        if (seen.insert(p).second) out.push_back(p);
    }
    return out;
}

APi a_pi_at(const ComplexBivector& pi, const Point& p) {
    const int n = pi.dim();
    BivectorParts parts = bivector_at(pi, p);
    CMatrix anchor = realified_anchor(parts);
    CMatrix m = coefficient_matrix_at(pi, p);
    CMatrix delta = real_slice(row_span(m));

    CMatrix target = CMatrix::Zero(delta.rows(), 2 * n);
    if (delta.rows()) target.leftCols(n) = delta;
    APi out;
    out.preimage_route = SubspaceReal::from_generators(2 * n, preimage_span(anchor, target));

    // Real annihilator of Δ inside T*_ℂ for Re⟨β, v⟩: (Ann Δ) ⊕ i·(all covectors).
    CMatrix ann = delta.rows() ? nullspace(delta) : CMatrix(CMatrix::Identity(n, n));
    CMatrix gens = CMatrix::Zero(ann.rows() + n, 2 * n);
    if (ann.rows()) gens.topLeftCorner(ann.rows(), n) = ann;
    gens.bottomRightCorner(n, n) = CMatrix::Identity(n, n);
    CMatrix img = image_span(anchor, gens);
    // Re((ξ+iη)(u+iv)) = ξ·u − η·v.
    CMatrix pairing_rows(img.rows(), 2 * n);
    if (img.rows()) {
        pairing_rows.leftCols(n) = img.leftCols(n);
        pairing_rows.rightCols(n) = -img.rightCols(n);
    }
    CMatrix a2 = img.rows() ? nullspace(pairing_rows) : CMatrix(CMatrix::Identity(2 * n, 2 * n));
    out.annihilator_route = SubspaceReal::from_generators(2 * n, a2);

    const CMatrix& a = out.preimage_route.basis();
    CMatrix cplx = a.rows() ? CMatrix(a.leftCols(n) + a.rightCols(n) * I) : CMatrix(0, n);
    out.minimal = cplx.rows() ? row_span(cplx) : CMatrix(0, n);
    return out;
}

PresymplecticData presymplectic_at(const ComplexBivector& pi, const Point& p) {
    const int n = pi.dim();
    CMatrix m = coefficient_matrix_at(pi, p);
    PresymplecticData d;
    d.delta = SubspaceReal::from_generators(n, real_slice(row_span(m)));
    Forms left = forms_on(m, d.delta.basis(), PivotOrder::leftmost);
    Forms right = forms_on(m, d.delta.basis(), PivotOrder::rightmost);
    d.omega = left.omega;
    d.omega_re = left.re;
    d.omega_im = left.im;
    d.well_defined = left.omega == right.omega && left.re == right.re && left.im == right.im;
    d.parts_match = d.omega == CMatrix(d.omega_re + d.omega_im * I);
    return d;
}

HatSignCheck hat_sign_check(const ComplexBivector& pi, const Point& p) {
    CMatrix m = coefficient_matrix_at(pi, p);
    Lagrangian l = graph(m, GraphKind::bivector);
    PresymplecticData d = presymplectic_at(pi, p);
    HatSignCheck h;
    h.omega_re = d.omega_re;
    h.omega_im = d.omega_im;
    h.eps_hat = form_on(complexify(hat(l)), d.delta.basis());
    h.eps_check = form_on(complexify(check(l)), d.delta.basis());
    h.hat_ok = h.eps_hat == CMatrix(-d.omega_im);
    h.check_ok = h.eps_check == CMatrix(-d.omega_re);
    h.literal_ok = h.eps_hat == CMatrix(-d.omega_re);
    return h;
}

GcsData gcs_matrix(const CMatrix& p1, const CMatrix& p2) {
    const Index n = p1.rows();
    auto inv = inverse(p2);
    if (!inv)
        throw SingularImaginaryPart("imaginary part is singular (real index " +
                                    std::to_string(n - rank(p2)) + " > 0): no generalized complex structure");
    const CMatrix& q = *inv;
    GcsData g;
    g.sigma = p1 * q * p1 + p2;
    g.j.resize(2 * n, 2 * n);
    g.j.topLeftCorner(n, n) = p1 * q;
    g.j.topRightCorner(n, n) = g.sigma;
    g.j.bottomLeftCorner(n, n) = -q;
    g.j.bottomRightCorner(n, n) = -q * p1;
    return g;
}

GcsData gcs_matrix(const ComplexBivector& pi, const Point& p) {
    BivectorParts parts = bivector_at(pi, p);
    return gcs_matrix(parts.pi1, parts.pi2);
}

bool squares_to_minus_identity(const CMatrix& j) {
    return CMatrix(j * j) == CMatrix(-CMatrix::Identity(j.rows(), j.cols()));
}

bool preserves_pairing(const CMatrix& j) {
    const Index n = j.rows() / 2;
    // Gram matrix of the pairing up to the factor 1/2, which cancels.
    CMatrix g = CMatrix::Zero(2 * n, 2 * n);
    g.topRightCorner(n, n) = CMatrix::Identity(n, n);
    g.bottomLeftCorner(n, n) = CMatrix::Identity(n, n);
    CMatrix gj = g * j;
    return CMatrix(j.transpose() * gj) == g;
}

Lagrangian plus_i_eigenspace(const CMatrix& j) {
    const Index m = j.rows();
    CMatrix shifted = j - CMatrix::Identity(m, m) * I;
    return Lagrangian::from_generators(static_cast<int>(m / 2), nullspace(shifted), Lagrangian::Mode::isotropic);
}

TildeFoliation tilde_foliation_check(const ComplexBivector& pi, const Point& p) {
    const int n = pi.dim();
    CMatrix m = coefficient_matrix_at(pi, p);
    PresymplecticData d = presymplectic_at(pi, p);
    TildeFoliation t;
    t.tilde = tilde(graph(m, GraphKind::bivector));
    t.expected = from_distribution(n, d.delta.basis(), -d.omega);
    return t;
}

std::vector<MultiField> image_generators(const MultiField& bivector) {
    std::vector<MultiField> out;
    const Chart& c = bivector.chart();
    for (int k = 0; k < c.dim(); ++k) out.push_back(contract(FormField::coordinate(c, k), bivector));
    return out;
}

InvolutivityReport involutivity_sample(const std::vector<MultiField>& generators, const std::vector<Point>& points) {
    InvolutivityReport rep;
    if (generators.empty()) return rep;
    const int n = generators.front().chart().dim();
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j) {
            MultiField br = schouten(generators[i], generators[j]);
            for (const auto& p : points) {
                CMatrix span = eval_vector_fields(generators, n, p);
                CMatrix v = eval_vector_fields({br}, n, p);
                if (!span_contains(span, v))
                    rep.failures.push_back({static_cast<int>(i), static_cast<int>(j), p, br});
            }
        }
    return rep;
}

}  // namespace cxp
