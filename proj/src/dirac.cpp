#include "cxpoisson/dirac.hpp"

#include <sstream>

namespace cxp {

namespace {

const GaussScalar I = GaussScalar::i();

// Rows spanning the coordinate subspace on the given columns.
CMatrix coordinate_rows(Index m, Index first, Index count) {
    CMatrix r = CMatrix::Zero(count, m);
    for (Index k = 0; k < count; ++k) r(k, first + k) = GaussScalar(1);
    return r;
}

CMatrix select_columns(const CMatrix& rows, const std::vector<Index>& cols) {
    CMatrix r(rows.rows(), static_cast<Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) r.col(static_cast<Index>(k)) = rows.col(cols[k]);
    return r;
}

void require_skew(const CMatrix& m, int n) {
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("datum must be n×n");
    if (!is_skew(m)) throw NonSkew("datum is not skew-symmetric");
}

void require_same_n(const Lagrangian& a, const Lagrangian& b) {
    if (a.n() != b.n()) throw DimensionMismatch("lagrangians live in different ambient spaces");
}

Lagrangian isotropic(int n, const CMatrix& gens) {
    return Lagrangian::from_generators(n, gens, Lagrangian::Mode::isotropic);
}

}  // namespace

SubspaceReal SubspaceReal::from_generators(Index m, const CMatrix& gens) {
    if (gens.rows() > 0 && gens.cols() != m) throw DimensionMismatch("generator length differs from ambient dimension");
    if (!is_real(gens)) throw std::invalid_argument("real subspace needs real generators");
    SubspaceReal s;
    s.m_ = m;
    s.basis_ = gens.rows() ? row_span(gens) : CMatrix(0, m);
    return s;
}

bool SubspaceReal::contains(const SubspaceReal& o) const {
    return o.dim() == 0 || span_contains(basis_, o.basis_);
}

GaussScalar pairing(const CVector& u, const CVector& v, int n) {
    GaussScalar s;
    for (int k = 0; k < n; ++k) s += u(n + k) * v(k) + u(k) * v(n + k);
    return s * GaussScalar(Rational(1, 2));
}

bool is_isotropic(const CMatrix& rows, int n) {
    for (Index a = 0; a < rows.rows(); ++a)
        for (Index b = a; b < rows.rows(); ++b)
            if (!pairing(rows.row(a).transpose(), rows.row(b).transpose(), n).is_zero()) return false;
    return true;
}

Lagrangian Lagrangian::from_generators(int n, const CMatrix& gens, Mode mode) {
    if (n < 1) throw DimensionMismatch("ambient half-dimension must be positive");
    if (gens.rows() > 0 && gens.cols() != 2 * n) throw DimensionMismatch("generators must have length 2n");
    Lagrangian l;
    l.n_ = n;
    l.basis_ = gens.rows() ? row_span(gens) : CMatrix(0, 2 * n);
    if (!is_isotropic(l.basis_, n)) throw NotLagrangian("span is not isotropic for the pairing");
    if (mode == Mode::strict && l.dim() != n)
        throw NotLagrangian("isotropic span has dimension " + std::to_string(l.dim()) + ", expected " +
                            std::to_string(n));
    return l;
}

Lagrangian Lagrangian::tangent_space(int n) { return from_generators(n, coordinate_rows(2 * n, 0, n)); }
Lagrangian Lagrangian::cotangent_space(int n) { return from_generators(n, coordinate_rows(2 * n, n, n)); }

std::string format_rows(const CMatrix& rows) {
    std::ostringstream os;
    os << "[";
    for (Index r = 0; r < rows.rows(); ++r) {
        os << (r ? ", (" : "(");
        for (Index c = 0; c < rows.cols(); ++c) os << (c ? ", " : "") << rows(r, c).str();
        os << ")";
    }
    os << "]";
    return os.str();
}

std::string Lagrangian::str() const { return format_rows(basis_); }

Lagrangian graph(const CMatrix& datum, GraphKind kind) {
    const int n = static_cast<int>(datum.rows());
    require_skew(datum, n);
    CMatrix g(n, 2 * n);
    if (kind == GraphKind::bivector) {
        // π♯(dx_k) has components π_kj, i.e. row k of the coefficient matrix.
        g.leftCols(n) = datum;
        g.rightCols(n) = CMatrix::Identity(n, n);
    } else {
        g.leftCols(n) = CMatrix::Identity(n, n);
        g.rightCols(n) = datum;
    }
    return Lagrangian::from_generators(n, g);
}

std::optional<CMatrix> bivector_of(const Lagrangian& l) {
    if (!l.is_lagrangian()) return std::nullopt;
    auto inv = inverse(l.cotangent());
    if (!inv) return std::nullopt;
    return CMatrix(*inv * l.tangent());
}

std::optional<CMatrix> twoform_of(const Lagrangian& l) {
    if (!l.is_lagrangian()) return std::nullopt;
    auto inv = inverse(l.tangent());
    if (!inv) return std::nullopt;
    return CMatrix(*inv * l.cotangent());
}

Lagrangian from_distribution(int n, const CMatrix& e, const CMatrix& eps) {
    const Index k = e.rows();
    if ((k > 0 && e.cols() != n) || eps.rows() != k || eps.cols() != k)
        throw DimensionMismatch("distribution and form shapes disagree");
    if (!is_skew(eps)) throw NonSkew("ε must be skew");
    if (rank(e) != k) throw std::invalid_argument("distribution rows must be independent");
    CMatrix ann = k ? nullspace(e) : CMatrix(CMatrix::Identity(n, n));
    CMatrix gens(k + ann.rows(), 2 * n);
    for (Index j = 0; j < k; ++j) {
        auto xi = solve<GaussScalar>(e, eps.row(j).transpose());
        gens.block(j, 0, 1, n) = e.row(j);
        gens.block(j, n, 1, n) = xi->transpose();
    }
    for (Index a = 0; a < ann.rows(); ++a) {
        gens.block(k + a, 0, 1, n) = CMatrix::Zero(1, n);
        gens.block(k + a, n, 1, n) = ann.row(a);
    }
    return Lagrangian::from_generators(n, gens, Lagrangian::Mode::isotropic);
}

CMatrix form_on(const Lagrangian& l, const CMatrix& range_rows) {
    const int n = l.n();
    const Index k = range_rows.rows();
    CMatrix eps(k, k);
    CMatrix tan_t = l.tangent().transpose();
    for (Index a = 0; a < k; ++a) {
        auto c = solve<GaussScalar>(tan_t, range_rows.row(a).transpose());
        if (!c) throw std::invalid_argument("vector is not in the range of L");
        CVector xi = l.cotangent().transpose() * *c;
        for (Index b = 0; b < k; ++b) {
            GaussScalar s;
            for (int j = 0; j < n; ++j) s += xi(j) * range_rows(b, j);
            eps(a, b) = s;
        }
    }
    return eps;
}

Lagrangian product(ProductKind kind, const Lagrangian& l1, const Lagrangian& l2) {
    require_same_n(l1, l2);
    const int n = l1.n();
    if (kind == ProductKind::complex_tangent || kind == ProductKind::complex_cotangent) {
        if (!l1.is_real() || !l2.is_real()) throw std::invalid_argument("complex sums take real lagrangians");
        if (kind == ProductKind::complex_tangent)
            return product(ProductKind::tangent, l1, scalar_dot(I, l2));
        return product(ProductKind::cotangent, l1, scalar_bullet(I, l2));
    }
    const CMatrix a1 = l1.tangent(), c1 = l1.cotangent(), a2 = l2.tangent(), c2 = l2.cotangent();
    const Index k1 = l1.dim(), k2 = l2.dim();
    const bool tangent = kind == ProductKind::tangent;
    // Match the shared component: tangent parts for ⋆, cotangent parts for ⊛.
    CMatrix sys(n, k1 + k2);
    sys.leftCols(k1) = (tangent ? a1 : c1).transpose();
    sys.rightCols(k2) = -(tangent ? a2 : c2).transpose();
    CMatrix ns = nullspace(sys);
    CMatrix gens(ns.rows(), 2 * n);
    for (Index r = 0; r < ns.rows(); ++r) {
        CMatrix u = ns.block(r, 0, 1, k1), v = ns.block(r, k1, 1, k2);
        if (tangent) {
            gens.block(r, 0, 1, n) = u * a1;
            gens.block(r, n, 1, n) = u * c1 + v * c2;
        } else {
            gens.block(r, 0, 1, n) = u * a1 + v * a2;
            gens.block(r, n, 1, n) = u * c1;
        }
    }
    return isotropic(n, gens);
}

Lagrangian product(ProductKind kind, const SubspaceReal& l1, const SubspaceReal& l2) {
    return product(kind, complexify(l1), complexify(l2));
}

Lagrangian transform(TransformKind kind, const CMatrix& datum, const Lagrangian& l) {
    const int n = l.n();
    CMatrix rows = l.basis();
    switch (kind) {
        case TransformKind::b_field:
            require_skew(datum, n);
            rows.rightCols(n) += l.tangent() * datum;
            break;
        case TransformKind::beta:
            require_skew(datum, n);
            rows.leftCols(n) += l.cotangent() * datum;
            break;
        case TransformKind::scalar_dot:
        case TransformKind::scalar_bullet: {
            if (datum.rows() != 1 || datum.cols() != 1) throw DimensionMismatch("scalar datum must be 1×1");
            const GaussScalar z = datum(0, 0);
            if (z.is_zero()) throw std::invalid_argument("scalar action needs a nonzero scalar");
            if (kind == TransformKind::scalar_dot)
                rows.rightCols(n) *= z;
            else
                rows.leftCols(n) *= z;
            break;
        }
        case TransformKind::conjugate:
            rows = conj(rows);
            break;
    }
    return Lagrangian::from_generators(n, rows, l.is_lagrangian() ? Lagrangian::Mode::strict
                                                                   : Lagrangian::Mode::isotropic);
}

Lagrangian b_field(const CMatrix& b, const Lagrangian& l) { return transform(TransformKind::b_field, b, l); }
Lagrangian beta(const CMatrix& b, const Lagrangian& l) { return transform(TransformKind::beta, b, l); }

Lagrangian scalar_dot(const GaussScalar& z, const Lagrangian& l) {
    return transform(TransformKind::scalar_dot, CMatrix::Constant(1, 1, z), l);
}

Lagrangian scalar_bullet(const GaussScalar& z, const Lagrangian& l) {
    return transform(TransformKind::scalar_bullet, CMatrix::Constant(1, 1, z), l);
}

Lagrangian conjugate(const Lagrangian& l) { return transform(TransformKind::conjugate, CMatrix(0, 0), l); }

Lagrangian complexify(const SubspaceReal& s) {
    if (s.ambient() % 2 != 0) throw DimensionMismatch("ambient dimension must be even");
    return Lagrangian::from_generators(static_cast<int>(s.ambient() / 2), s.basis(), Lagrangian::Mode::isotropic);
}

namespace {

// Realified coordinates of ℂ^{2n}: [Re X, Re ξ, Im X, Im ξ]. Keeps Im X = 0 and
// projects onto (Re X, Re ξ) or (Re X, Im ξ).
SubspaceReal real_tangent_slice(const Lagrangian& l, bool imaginary_covector) {
    const Index n = l.n();
    CMatrix real_rows = realify(l.basis());
    CMatrix keep(3 * n, 4 * n);
    keep.topRows(2 * n) = coordinate_rows(4 * n, 0, 2 * n);
    keep.bottomRows(n) = coordinate_rows(4 * n, 3 * n, n);
    CMatrix slice = intersect_span(real_rows, keep);
    std::vector<Index> cols;
    for (Index k = 0; k < n; ++k) cols.push_back(k);
    for (Index k = 0; k < n; ++k) cols.push_back((imaginary_covector ? 3 * n : n) + k);
    return SubspaceReal::from_generators(2 * n, select_columns(slice, cols));
}

}  // namespace

SubspaceReal hat(const Lagrangian& l) { return real_tangent_slice(l, true); }
SubspaceReal check(const Lagrangian& l) { return real_tangent_slice(l, false); }

Lagrangian tilde(const Lagrangian& l) { return product(ProductKind::complex_tangent, check(l), hat(l)); }

SubspaceReal hat_cot(const Lagrangian& l) {
    Lagrangian prod = product(ProductKind::cotangent, l, scalar_bullet(GaussScalar(-1), conjugate(l)));
    Lagrangian scaled = scalar_bullet((GaussScalar(2) * I).inverse(), prod);
    return real_part_of(scaled);
}

SubspaceReal check_cot(const Lagrangian& l) {
    Lagrangian prod = product(ProductKind::cotangent, l, conjugate(l));
    return real_part_of(scalar_bullet(GaussScalar(Rational(1, 2)), prod));
}

Lagrangian tilde_cot(const Lagrangian& l) {
    return product(ProductKind::complex_cotangent, check_cot(l), hat_cot(l));
}

CMatrix range_of(const Lagrangian& l) { return row_span(l.tangent()); }

CMatrix kernel_of(const Lagrangian& l) {
    const int n = l.n();
    CMatrix k = intersect_span(l.basis(), coordinate_rows(2 * n, 0, n));
    return CMatrix(k.leftCols(n));
}

SubspaceReal delta_of(const Lagrangian& l) {
    return SubspaceReal::from_generators(l.n(), real_slice(range_of(l)));
}

SubspaceReal d_of(const Lagrangian& l) {
    return SubspaceReal::from_generators(l.n(), real_projection(range_of(l)));
}

SubspaceReal real_part_of(const Lagrangian& l) {
    return SubspaceReal::from_generators(2 * l.n(), real_slice(l.basis()));
}

bool is_quasi_real(const Lagrangian& l) {
    return same_span(range_of(l), delta_of(l).basis());
}

Indices indices(const Lagrangian& l) {
    Indices r;
    r.real_index = real_part_of(l).dim();
    r.dim_range = range_of(l).rows();
    r.dim_delta = delta_of(l).dim();
    r.dim_D = d_of(l).dim();
    r.kernel_dim = kernel_of(l).rows();
    return r;
}

KPerp k_and_perp(const Lagrangian& l) {
    const int n = l.n();
    KPerp out;
    out.k = real_part_of(l);
    const CMatrix& k = out.k.basis();
    // v ⊥ w for the pairing iff v · swap(w) = 0, with swap exchanging the halves.
    CMatrix swapped(k.rows(), 2 * n);
    if (k.rows()) {
        swapped.leftCols(n) = k.rightCols(n);
        swapped.rightCols(n) = k.leftCols(n);
    }
    CMatrix perp = k.rows() ? nullspace(swapped) : CMatrix(CMatrix::Identity(2 * n, 2 * n));
    out.k_perp = SubspaceReal::from_generators(2 * n, perp);
    out.pr_k = SubspaceReal::from_generators(n, k.rows() ? row_span(CMatrix(k.leftCols(n))) : CMatrix(0, n));
    out.pr_k_perp = SubspaceReal::from_generators(
        n, perp.rows() ? row_span(CMatrix(out.k_perp.basis().leftCols(n))) : CMatrix(0, n));
    out.d = d_of(l);
    SubspaceReal h = hat(l);
    CMatrix hk = intersect_span(h.basis(), coordinate_rows(2 * n, 0, n));
    out.ker_eps_hat = SubspaceReal::from_generators(n, hk.rows() ? CMatrix(hk.leftCols(n)) : CMatrix(0, n));
    return out;
}

Lagrangian image(ImageKind kind, const CMatrix& a, const Lagrangian& l) {
    const Index nn = a.rows(), m = a.cols();
    const Index k = l.dim();
    const CMatrix u = l.tangent(), v = l.cotangent();
    if (kind == ImageKind::backward) {
        if (l.n() != nn) throw DimensionMismatch("backward image: map target differs from L's space");
        CMatrix sys(nn, k + m);
        sys.leftCols(k) = u.transpose();
        sys.rightCols(m) = -a;
        CMatrix ns = nullspace(sys);
        CMatrix gens(ns.rows(), 2 * m);
        for (Index r = 0; r < ns.rows(); ++r) {
            CMatrix c = ns.block(r, 0, 1, k);
            gens.block(r, 0, 1, m) = ns.block(r, k, 1, m);
            gens.block(r, m, 1, m) = c * v * a;
        }
        return Lagrangian::from_generators(static_cast<int>(m), gens, Lagrangian::Mode::isotropic);
    }
    if (l.n() != m) throw DimensionMismatch("forward image: map source differs from L's space");
    CMatrix sys(m, k + nn);
    sys.leftCols(k) = v.transpose();
    sys.rightCols(nn) = -a.transpose();
    CMatrix ns = nullspace(sys);
    CMatrix gens(ns.rows(), 2 * nn);
    for (Index r = 0; r < ns.rows(); ++r) {
        CMatrix c = ns.block(r, 0, 1, k);
        gens.block(r, 0, 1, nn) = c * u * a.transpose();
        gens.block(r, nn, 1, nn) = ns.block(r, k, 1, nn);
    }
    return Lagrangian::from_generators(static_cast<int>(nn), gens, Lagrangian::Mode::isotropic);
}

}  // namespace cxp
