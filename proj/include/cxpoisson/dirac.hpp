#ifndef CXPOISSON_DIRAC_HPP
#define CXPOISSON_DIRAC_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "cxpoisson/linalg.hpp"

namespace cxp {

struct NotLagrangian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonSkew : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Real subspace of ℝ^m with a canonical echelon basis (stored with real GaussScalar entries).
class SubspaceReal {
public:
    SubspaceReal() = default;
    /// Throws when a generator has a nonzero imaginary part.
    static SubspaceReal from_generators(Index m, const CMatrix& gens);

    Index ambient() const { return m_; }
    Index dim() const { return basis_.rows(); }
    const CMatrix& basis() const { return basis_; }
    bool contains(const SubspaceReal& o) const;

    friend bool operator==(const SubspaceReal& a, const SubspaceReal& b) {
        return a.m_ == b.m_ && a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
    }

private:
    Index m_ = 0;
    CMatrix basis_;
};

/// Subspace of ℂ^{2n} = T_ℂ ⊕ T*_ℂ: columns 0..n−1 tangent, n..2n−1 cotangent.
class Lagrangian {
public:
    enum class Mode { strict, isotropic };

    Lagrangian() = default;
    /// Canonical echelon basis of the span. In strict mode, throws NotLagrangian unless the
    /// span is isotropic of dimension n; isotropic mode only requires isotropy.
    static Lagrangian from_generators(int n, const CMatrix& gens, Mode mode = Mode::strict);
    static Lagrangian tangent_space(int n);
    static Lagrangian cotangent_space(int n);

    int n() const { return n_; }
    Index dim() const { return basis_.rows(); }
    const CMatrix& basis() const { return basis_; }
    CMatrix tangent() const { return basis_.leftCols(n_); }
    CMatrix cotangent() const { return basis_.rightCols(n_); }
    bool is_lagrangian() const { return dim() == n_; }
    bool is_real() const { return cxp::is_real(basis_); }

    std::string str() const;

    friend bool operator==(const Lagrangian& a, const Lagrangian& b) {
        return a.n_ == b.n_ && a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Lagrangian& a, const Lagrangian& b) { return !(a == b); }

private:
    int n_ = 0;
    CMatrix basis_;
};

/// ⟨X+ξ, Y+η⟩ = ½(η(X) + ξ(Y)), ℂ-bilinear.
GaussScalar pairing(const CVector& u, const CVector& v, int n);
bool is_isotropic(const CMatrix& rows, int n);

std::string format_rows(const CMatrix& rows);

enum class GraphKind { bivector, twoform };
/// Bivector: {π♯ξ + ξ} with π♯ξ = π(ξ,·). Two-form: {X + ι_Xω}. Datum is the coefficient matrix.
Lagrangian graph(const CMatrix& datum, GraphKind kind);
/// Matrix P with L = graph(P, bivector) when L ∩ T_ℂ = 0.
std::optional<CMatrix> bivector_of(const Lagrangian& l);
/// Matrix W with L = graph(W, twoform) when L ∩ T*_ℂ = 0.
std::optional<CMatrix> twoform_of(const Lagrangian& l);
/// L(E, ε) = {X+ξ : X ∈ E, ξ|_E = ι_Xε}; eps is the matrix of ε on the rows of e.
Lagrangian from_distribution(int n, const CMatrix& e, const CMatrix& eps);
/// Matrix of ε_L on the given basis of pr_T L: ε(X,Y) = ξ(Y) for X+ξ ∈ L.
CMatrix form_on(const Lagrangian& l, const CMatrix& range_rows);

enum class ProductKind { tangent, cotangent, complex_tangent, complex_cotangent };
/// Pointwise products; complex kinds require real inputs and use
/// (L₁)_ℂ ⋆ (i·L₂) and (L₁)_ℂ ⊛ (i∙L₂). The result may be isotropic of lower dimension.
Lagrangian product(ProductKind kind, const Lagrangian& l1, const Lagrangian& l2);
Lagrangian product(ProductKind kind, const SubspaceReal& l1, const SubspaceReal& l2);

enum class TransformKind { b_field, beta, scalar_dot, scalar_bullet, conjugate };
/// e^B: X+ξ+ι_XB, e^β: X+ι_ξβ+ξ, z·: X+zξ, z∙: zX+ξ, conjugate: entrywise.
Lagrangian transform(TransformKind kind, const CMatrix& datum, const Lagrangian& l);
Lagrangian b_field(const CMatrix& b, const Lagrangian& l);
Lagrangian beta(const CMatrix& b, const Lagrangian& l);
Lagrangian scalar_dot(const GaussScalar& z, const Lagrangian& l);
Lagrangian scalar_bullet(const GaussScalar& z, const Lagrangian& l);
Lagrangian conjugate(const Lagrangian& l);

/// Complexification of a real subspace of ℝ^{2n}.
Lagrangian complexify(const SubspaceReal& s);

/// {X+ξ real : ∃η real, X + η + iξ ∈ L}
SubspaceReal hat(const Lagrangian& l);
/// {X+ξ real : ∃η real, X + ξ + iη ∈ L}
SubspaceReal check(const Lagrangian& l);
/// check(L) ⋆_ℂ hat(L)
Lagrangian tilde(const Lagrangian& l);
/// ((1/2i)∙(L ⊛ (−1)∙L̄)) ∩ 𝕋
SubspaceReal hat_cot(const Lagrangian& l);
/// (½∙(L ⊛ L̄)) ∩ 𝕋
SubspaceReal check_cot(const Lagrangian& l);
/// check_cot(L) ⊛_ℂ hat_cot(L)
Lagrangian tilde_cot(const Lagrangian& l);

struct Indices {
    Index real_index = 0;  ///< dim L ∩ ℝ^{2n}
    Index dim_range = 0;   ///< dim_ℂ pr_T L
    Index dim_delta = 0;   ///< dim range ∩ ℝⁿ
    Index dim_D = 0;       ///< dim of the real projection of the range
    Index kernel_dim = 0;  ///< dim L ∩ T_ℂ
};
Indices indices(const Lagrangian& l);

/// pr_T L, L ∩ T_ℂ (tangent parts), Δ = range ∩ ℝⁿ, D = real projection of the range.
CMatrix range_of(const Lagrangian& l);
CMatrix kernel_of(const Lagrangian& l);
SubspaceReal delta_of(const Lagrangian& l);
SubspaceReal d_of(const Lagrangian& l);
/// L ∩ ℝ^{2n}
SubspaceReal real_part_of(const Lagrangian& l);
/// Pr_T L = (Δ)_ℂ
bool is_quasi_real(const Lagrangian& l);

struct KPerp {
    SubspaceReal k;          ///< L ∩ 𝕋
    SubspaceReal k_perp;     ///< pairing-orthogonal of K in 𝕋
    SubspaceReal pr_k;       ///< pr_T K
    SubspaceReal pr_k_perp;  ///< pr_T K⊥
    SubspaceReal d;          ///< D_L
    SubspaceReal ker_eps_hat;  ///< ker ε of hat(L)
    bool perp_matches_d() const { return pr_k_perp == d; }
    bool k_matches_ker() const { return pr_k == ker_eps_hat; }
};
KPerp k_and_perp(const Lagrangian& l);

enum class ImageKind { backward, forward };
/// a is an (n × m) matrix mapping ℂ^m → ℂ^n.
/// backward: L ⊂ ℂ^{2n} ↦ {X + Aᵀξ : AX + ξ ∈ L} ⊂ ℂ^{2m};
/// forward:  L ⊂ ℂ^{2m} ↦ {AX + ξ : X + Aᵀξ ∈ L} ⊂ ℂ^{2n}.
Lagrangian image(ImageKind kind, const CMatrix& a, const Lagrangian& l);

}  // namespace cxp

#endif
