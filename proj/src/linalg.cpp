#include "cxpoisson/linalg.hpp"

namespace cxp {

CMatrix conj(const CMatrix& m) {
    return m.unaryExpr([](const GaussScalar& z) { return z.conj(); });
}

CMatrix real_part(const CMatrix& m) {
    return m.unaryExpr([](const GaussScalar& z) { return GaussScalar(z.re()); });
}

CMatrix imag_part(const CMatrix& m) {
    return m.unaryExpr([](const GaussScalar& z) { return GaussScalar(z.im()); });
}

bool is_real(const CMatrix& m) {
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_real()) return false;
    return true;
}

bool is_skew(const CMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = r; c < m.cols(); ++c)
            if (m(r, c) != -m(c, r)) return false;
    return true;
}

CMatrix real_slice(const CMatrix& rows) { return intersect_span(rows, conj(rows)); }

CMatrix real_projection(const CMatrix& rows) {
    return sum_span(real_part(rows), imag_part(rows));
}

CMatrix realify(const CMatrix& rows) {
    const Index k = rows.rows(), m = rows.cols();
    CMatrix out(2 * k, 2 * m);
    CMatrix re = real_part(rows), im = imag_part(rows);
    for (Index r = 0; r < k; ++r) {
        out.block(2 * r, 0, 1, m) = re.row(r);
        out.block(2 * r, m, 1, m) = im.row(r);
        out.block(2 * r + 1, 0, 1, m) = -im.row(r);
        out.block(2 * r + 1, m, 1, m) = re.row(r);
    }
    return out;
}

}  // namespace cxp
