#ifndef CXPOISSON_LINALG_HPP
#define CXPOISSON_LINALG_HPP

// Exact dense linear algebra on Eigen containers. Subspaces are stored as
// matrices whose rows span them, kept in reduced row echelon form.

#include <Eigen/Core>
#include <optional>
#include <utility>
#include <vector>

#include "cxpoisson/gauss.hpp"

namespace cxp {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using CMatrix = Mat<GaussScalar>;
using CVector = Vec<GaussScalar>;
using Index = Eigen::Index;

inline bool is_zero(const GaussScalar& z) { return z.is_zero(); }

template <typename Scalar>
struct Echelon {
    Mat<Scalar> rows;             ///< nonzero rows of the RREF
    std::vector<Index> pivots;    ///< pivot column of each row
};

/// Reduced row echelon form with leftmost pivots; zero rows are dropped.
template <typename Scalar>
Echelon<Scalar> rref(Mat<Scalar> m) {
    const Index nr = m.rows(), nc = m.cols();
    std::vector<Index> pivots;
    Index r = 0;
    for (Index c = 0; c < nc && r < nr; ++c) {
        Index p = r;
        while (p < nr && is_zero(m(p, c))) ++p;
        if (p == nr) continue;
        if (p != r) m.row(p).swap(m.row(r));
        const Scalar inv = Scalar(1) / m(r, c);
        for (Index k = c; k < nc; ++k)
            if (!is_zero(m(r, k))) m(r, k) *= inv;
        for (Index q = 0; q < nr; ++q) {
            if (q == r || is_zero(m(q, c))) continue;
            const Scalar f = m(q, c);
            for (Index k = c; k < nc; ++k)
                if (!is_zero(m(r, k))) m(q, k) -= f * m(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    return {m.topRows(r), std::move(pivots)};
}

template <typename Scalar>
Mat<Scalar> row_span(const Mat<Scalar>& m) {
    return rref(m).rows;
}

template <typename Scalar>
Index rank(const Mat<Scalar>& m) {
    return rref(m).rows.rows();
}

/// Rows spanning {x : m x = 0}.
template <typename Scalar>
Mat<Scalar> nullspace(const Mat<Scalar>& m) {
    const Index nc = m.cols();
    Echelon<Scalar> e = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(nc), false);
    for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Index> free;
    for (Index c = 0; c < nc; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
    Mat<Scalar> out = Mat<Scalar>::Zero(static_cast<Index>(free.size()), nc);
    for (std::size_t k = 0; k < free.size(); ++k) {
        const Index f = free[k];
        out(static_cast<Index>(k), f) = Scalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            out(static_cast<Index>(k), e.pivots[r]) = -e.rows(static_cast<Index>(r), f);
    }
    return out;
}

template <typename Scalar>
Mat<Scalar> stack_rows(const Mat<Scalar>& a, const Mat<Scalar>& b) {
    Mat<Scalar> s(a.rows() + b.rows(), a.rows() ? a.cols() : b.cols());
    if (a.rows()) s.topRows(a.rows()) = a;
    if (b.rows()) s.bottomRows(b.rows()) = b;
    return s;
}

template <typename Scalar>
Mat<Scalar> sum_span(const Mat<Scalar>& a, const Mat<Scalar>& b) {
    return row_span(stack_rows(a, b));
}

/// Row span of a intersected with row span of b.
template <typename Scalar>
Mat<Scalar> intersect_span(const Mat<Scalar>& a, const Mat<Scalar>& b) {
    const Index m = a.cols();
    if (a.rows() == 0 || b.rows() == 0) return Mat<Scalar>(0, m);
    Mat<Scalar> sys(m, a.rows() + b.rows());
    sys.leftCols(a.rows()) = a.transpose();
    sys.rightCols(b.rows()) = -b.transpose();
    Mat<Scalar> ns = nullspace(sys);
    if (ns.rows() == 0) return Mat<Scalar>(0, m);
    Mat<Scalar> coeffs = ns.leftCols(a.rows());
    return row_span(Mat<Scalar>(coeffs * a));
}

/// Span of {map * v : v in span(rows)}; map is (out x in).
template <typename Scalar>
Mat<Scalar> image_span(const Mat<Scalar>& map, const Mat<Scalar>& rows) {
    if (rows.rows() == 0) return Mat<Scalar>(0, map.rows());
    return row_span(Mat<Scalar>(rows * map.transpose()));
}

/// Span of {v : map * v in span(rows)}.
template <typename Scalar>
Mat<Scalar> preimage_span(const Mat<Scalar>& map, const Mat<Scalar>& rows) {
    const Index in = map.cols();
    Mat<Scalar> sys(map.rows(), in + rows.rows());
    sys.leftCols(in) = map;
    if (rows.rows()) sys.rightCols(rows.rows()) = -rows.transpose();
    Mat<Scalar> ns = nullspace(sys);
    return row_span(Mat<Scalar>(ns.leftCols(in)));
}

template <typename Scalar>
bool same_span(const Mat<Scalar>& a, const Mat<Scalar>& b) {
    Mat<Scalar> ra = row_span(a), rb = row_span(b);
    return ra.rows() == rb.rows() && ra.cols() == rb.cols() && ra == rb;
}

template <typename Scalar>
bool span_contains(const Mat<Scalar>& rows, const Mat<Scalar>& v) {
    return rank(stack_rows(rows, v)) == rank(rows);
}

enum class PivotOrder { leftmost, rightmost };

/// One solution of m x = b, or nullopt. The pivot order picks which free
/// variables are set to zero, giving two different particular solutions.
template <typename Scalar>
std::optional<Vec<Scalar>> solve(const Mat<Scalar>& m, const Vec<Scalar>& b,
                                 PivotOrder order = PivotOrder::leftmost) {
    const Index nc = m.cols();
    Mat<Scalar> aug(m.rows(), nc + 1);
    for (Index c = 0; c < nc; ++c)
        aug.col(c) = m.col(order == PivotOrder::leftmost ? c : nc - 1 - c);
    aug.col(nc) = b;
    Echelon<Scalar> e = rref(aug);
    Vec<Scalar> x = Vec<Scalar>::Zero(nc);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == nc) return std::nullopt;
        x(e.pivots[r]) = e.rows(static_cast<Index>(r), nc);
    }
    if (order == PivotOrder::leftmost) return x;
    Vec<Scalar> y(nc);
    for (Index c = 0; c < nc; ++c) y(c) = x(nc - 1 - c);
    return y;
}

/// Inverse of a square matrix; nullopt when singular.
template <typename Scalar>
std::optional<Mat<Scalar>> inverse(const Mat<Scalar>& m) {
    const Index n = m.rows();
    Mat<Scalar> aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = Mat<Scalar>::Identity(n, n);
    Echelon<Scalar> e = rref(aug);
    if (e.rows.rows() < n || e.pivots[static_cast<std::size_t>(n - 1)] >= n) return std::nullopt;
    return Mat<Scalar>(e.rows.rightCols(n));
}

// GaussScalar-specific helpers.

CMatrix conj(const CMatrix& m);
CMatrix real_part(const CMatrix& m);
CMatrix imag_part(const CMatrix& m);
bool is_real(const CMatrix& m);
bool is_skew(const CMatrix& m);

/// Real vectors in the complex span: the echelon basis of S ∩ conj(S) is real.
CMatrix real_slice(const CMatrix& rows);
/// Real span of the real and imaginary parts of the vectors in S.
CMatrix real_projection(const CMatrix& rows);
/// Rows of the realification of a complex span: each v gives [Re v, Im v] and [-Im v, Re v].
CMatrix realify(const CMatrix& rows);

}  // namespace cxp

#endif
