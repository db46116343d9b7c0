#include "cxpoisson/poisson.hpp"

#include <stdexcept>

namespace cxp {

ComplexBivector::ComplexBivector(MultiField body) : body_(std::move(body)) {
    if (body_.degree() != 2) throw std::invalid_argument("bivector must have degree 2");
    auto [re, im] = decompose(body_);
    pi1_ = std::move(re);
    pi2_ = std::move(im);
}

ComplexBivector ComplexBivector::from_parts(const MultiField& pi1, const MultiField& pi2) {
    if (!pi1.is_real() || !pi2.is_real()) throw std::invalid_argument("parts must be real");
    return ComplexBivector(pi1 + pi2 * GaussScalar::i());
}

Poly ComplexBivector::coeff(int i, int j) const {
    if (i == j) return Poly(chart());
    return i < j ? body_.coeff({i, j}) : -body_.coeff({j, i});
}

Poly ComplexBivector::pair(const FormField& alpha, const FormField& beta) const {
    return evaluate(body_, {alpha, beta});
}

PolyMatrix PolyMatrix::identity(const Chart& chart, int n) {
    PolyMatrix m(chart, n, n);
    for (int k = 0; k < n; ++k) m(k, k) = Poly(chart, GaussScalar(1));
    return m;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : data)
        if (!p.is_zero()) return false;
    return true;
}

MultiField jacobi_residual(const ComplexBivector& pi) { return schouten(pi.body(), pi.body()); }

PairConditions pair_conditions(const ComplexBivector& pi) {
    return {schouten(pi.pi1(), pi.pi2()),
            schouten(pi.pi1(), pi.pi1()) - schouten(pi.pi2(), pi.pi2())};
}

namespace {

Poly part_coeff(const MultiField& m, int i, int j) {
    if (i == j) return Poly(m.chart());
    return i < j ? m.coeff({i, j}) : -m.coeff({j, i});
}

// Σ_l (A_il ∂_l B_jk + A_kl ∂_l B_ij + A_jl ∂_l B_ki)
Poly cyclic(const MultiField& a, const MultiField& b, int i, int j, int k) {
    Poly r(a.chart());
    for (int l = 0; l < a.chart().dim(); ++l) {
        r += part_coeff(a, i, l) * part_coeff(b, j, k).partial(l);
        r += part_coeff(a, k, l) * part_coeff(b, i, j).partial(l);
        r += part_coeff(a, j, l) * part_coeff(b, k, i).partial(l);
    }
    return r;
}

}  // namespace

std::vector<PdeResidual> jacobi_pde_residuals(const ComplexBivector& pi) {
    std::vector<PdeResidual> out;
    const int n = pi.dim();
    const MultiField &p1 = pi.pi1(), &p2 = pi.pi2();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                out.push_back({i, j, k, 1, cyclic(p1, p1, i, j, k) - cyclic(p2, p2, i, j, k)});
                out.push_back({i, j, k, 2, cyclic(p2, p1, i, j, k) + cyclic(p1, p2, i, j, k)});
            }
    return out;
}

Poly bracket_of_functions(const ComplexBivector& pi, const Poly& f, const Poly& g) {
    return pi.pair(complex_differential(f), complex_differential(g));
}

MultiField bracket_of_functions(const ComplexBivector& pi, const MultiField& f, const MultiField& g) {
    return MultiField::function(bracket_of_functions(pi, f.function_value(), g.function_value()));
}

MultiField hamiltonian(const ComplexBivector& pi, const Poly& h) {
    return -pi.sharp(complex_differential(h));
}

MultiField hamiltonian(const ComplexBivector& pi, const MultiField& h) {
    return hamiltonian(pi, h.function_value());
}

MultiField casimir_residual(const ComplexBivector& pi, const Poly& c) {
    return pi.sharp(complex_differential(c));
}

MultiField casimir_residual(const ComplexBivector& pi, const MultiField& c) {
    return casimir_residual(pi, c.function_value());
}

FormField cotangent_bracket(const ComplexBivector& pi, const FormField& a, const FormField& b) {
    if (a.degree() != 1 || b.degree() != 1) throw std::invalid_argument("cotangent bracket needs one-forms");
    return lie_derivative(pi.sharp(a), b) - lie_derivative(pi.sharp(b), a) -
           complex_differential(pi.pair(a, b));
}

FormField dual_apply(const PolyMatrix& n, const FormField& alpha) {
    if (alpha.degree() != 1 || n.rows != alpha.chart().dim() || n.cols != n.rows)
        throw std::invalid_argument("shape mismatch in N*");
    FormField r(alpha.chart(), 1);
    for (int j = 0; j < n.cols; ++j) {
        Poly c(alpha.chart());
        for (int i = 0; i < n.rows; ++i) c += alpha.coeff(i) * n(i, j);
        r.add({j}, c);
    }
    return r;
}

PolyMatrix sharp_matrix(const MultiField& sigma) {
    const Chart& ch = sigma.chart();
    const int n = ch.dim();
    PolyMatrix s(ch, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s(i, j) = part_coeff(sigma, j, i);
    return s;
}

namespace {

PolyMatrix product(const PolyMatrix& a, const PolyMatrix& b, const Chart& ch) {
    PolyMatrix r(ch, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j)
            for (int k = 0; k < a.cols; ++k) r(i, j) += a(i, k) * b(k, j);
    return r;
}

PolyMatrix transpose(const PolyMatrix& a, const Chart& ch) {
    PolyMatrix r(ch, a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r(j, i) = a(i, j);
    return r;
}

void require_real_bivector(const MultiField& sigma) {
    if (sigma.degree() != 2) throw std::invalid_argument("expected a bivector");
    if (!sigma.is_real()) throw std::invalid_argument("expected a real bivector");
}

// Bivector whose sharp matrix is s; throws unless s is skew.
MultiField bivector_from_sharp(const PolyMatrix& s, const Chart& ch) {
    MultiField m(ch, 2);
    for (int i = 0; i < s.rows; ++i) {
        if (!s(i, i).is_zero()) throw std::invalid_argument("N∘σ♯ is not skew: N is not compatible with σ");
        for (int j = i + 1; j < s.cols; ++j) {
            if (s(i, j) != -s(j, i)) throw std::invalid_argument("N∘σ♯ is not skew: N is not compatible with σ");
            m.add({i, j}, s(j, i));
        }
    }
    return m;
}

void require_shape(const MultiField& sigma, const PolyMatrix& n) {
    const int d = sigma.chart().dim();
    if (n.rows != d || n.cols != d) throw std::invalid_argument("N must be a dim×dim matrix");
}

}  // namespace

namespace construct {

ComplexBivector complexify(const MultiField& sigma) {
    require_real_bivector(sigma);
    return ComplexBivector(sigma);
}

ComplexBivector twist(const MultiField& sigma) {
    require_real_bivector(sigma);
    return ComplexBivector(sigma * GaussScalar::i());
}

ComplexBivector diagonal(const MultiField& sigma) {
    require_real_bivector(sigma);
    return ComplexBivector(sigma * GaussScalar(Rational(1), Rational(1)));
}

ComplexBivector conjugate(const ComplexBivector& pi) { return ComplexBivector(pi.body().conj()); }

ComplexBivector two_param(const MultiField& pi1, const MultiField& pi2, const Rational& mu,
                          const Rational& lambda) {
    require_real_bivector(pi1);
    require_real_bivector(pi2);
    return ComplexBivector(pi1 * GaussScalar(mu) + pi2 * GaussScalar(Rational(0), lambda));
}

ComplexBivector nijenhuis(const MultiField& sigma, const PolyMatrix& n) {
    require_real_bivector(sigma);
    require_shape(sigma, n);
    const Chart& ch = sigma.chart();
    MultiField sigma_n = bivector_from_sharp(product(n, sharp_matrix(sigma), ch), ch);
    return ComplexBivector(sigma + sigma_n * GaussScalar::i());
}

}  // namespace construct

bool NijenhuisResiduals::holds() const {
    if (!compat.is_zero()) return false;
    for (const auto& f : bracket)
        if (!f.is_zero()) return false;
    return true;
}

NijenhuisResiduals nijenhuis_residuals(const MultiField& sigma, const PolyMatrix& n) {
    require_real_bivector(sigma);
    require_shape(sigma, n);
    const Chart& ch = sigma.chart();
    const int d = ch.dim();
    NijenhuisResiduals out;
    PolyMatrix s = sharp_matrix(sigma);
    // σ♯∘N* has matrix S·Nᵀ since N* acts on covector coordinates by Nᵀ.
    PolyMatrix lhs = product(s, transpose(n, ch), ch);
    PolyMatrix rhs = product(n, s, ch);
    out.compat = PolyMatrix(ch, d, d);
    for (std::size_t k = 0; k < lhs.data.size(); ++k) out.compat.data[k] = lhs.data[k] - rhs.data[k];
    if (!out.compat.is_zero()) return out;

    const ComplexBivector sig(sigma);
    const ComplexBivector sig_n(bivector_from_sharp(rhs, ch));
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            FormField da = FormField::coordinate(ch, a), db = FormField::coordinate(ch, b);
            FormField res = cotangent_bracket(sig_n, da, db) -
                            cotangent_bracket(sig, dual_apply(n, da), db) -
                            cotangent_bracket(sig, da, dual_apply(n, db)) +
                            dual_apply(n, cotangent_bracket(sig, da, db));
            out.bracket.push_back(std::move(res));
        }
    return out;
}

namespace catalog {

ComplexBivector nb(const Chart& xyz, const Rational& a, const Rational& b) {
    if (xyz.dim() != 3) throw std::invalid_argument("NB example needs a 3-dimensional chart");
    if (b == 0) throw std::invalid_argument("parameter b must be nonzero");
    const GaussScalar I = GaussScalar::i();
    Poly y = Poly::variable(xyz, 1), z = Poly::variable(xyz, 2);
    MultiField m(xyz, 2);
    m.add({0, 1}, Poly(xyz, GaussScalar(Rational(1), a)));
    m.add({0, 2}, Poly(xyz, GaussScalar(Rational(0), b)));
    Rational c = (1 + a * a) / b;
    m.add({1, 2}, y + I * (y * GaussScalar(Rational(-a)) + z * GaussScalar(c)));
    return ComplexBivector(m);
}

ComplexBivector bihamiltonian(const Chart& chart3) {
    if (chart3.dim() != 3) throw std::invalid_argument("example needs a 3-dimensional chart");
    MultiField m(chart3, 2);
    m.add({0, 1}, Poly::variable(chart3, 2));
    m.add({1, 2}, Poly::variable(chart3, 0) * GaussScalar::i());
    return ComplexBivector(m);
}

}  // namespace catalog

}  // namespace cxp
