#ifndef CXPOISSON_GEOMETRY_HPP
#define CXPOISSON_GEOMETRY_HPP

#include <stdexcept>
#include <vector>

#include "cxpoisson/dirac.hpp"
#include "cxpoisson/poisson.hpp"

namespace cxp {

struct SingularImaginaryPart : std::domain_error {
    using std::domain_error::domain_error;
};

/// Coefficient matrix P_ij = π(dx_i, dx_j) at a point; row k is π♯(dx_k).
CMatrix coefficient_matrix_at(const ComplexBivector& pi, const Point& p);

struct BivectorParts {
    CMatrix pi1, pi2;  ///< real coefficient matrices
};
BivectorParts bivector_at(const ComplexBivector& pi, const Point& p);

/// Realified anchor acting on column vectors (ξ; η) ↦ (ρ₁; ρ₂), where
/// ρ₁(ξ+iη) = π₁♯ξ − π₂♯η and ρ₂(ξ+iη) = π₂♯ξ + π₁♯η.
CMatrix realified_anchor(const BivectorParts& parts);

struct RankProfile {
    Point point;
    Index dim_E = 0, dim_Delta = 0, dim_D = 0, real_index = 0, order = 0;
    bool regular_sample = true;
    bool strongly_regular_sample = true;
    bool quasi_real_sample = false;
};
/// Pointwise ranks; the regularity flags are relative to a one-point sample until
/// sample_profiles compares them across points.
RankProfile rank_profile(const ComplexBivector& pi, const Point& p);

struct SampleReport {
    std::vector<RankProfile> profiles;
    bool regular = true;           ///< dim E constant on the sample
    bool strongly_regular = true;  ///< dim E, dim Δ and dim D constant on the sample
    bool quasi_real = true;        ///< Δ = D at every sample point
};
SampleReport sample_profiles(const ComplexBivector& pi, const std::vector<Point>& points);

/// Deterministic grid of distinct points with nonzero rational coordinates.
std::vector<Point> default_grid(int dim, int size = 20);

struct APi {
    SubspaceReal preimage_route;    ///< {(ξ,η) : ρ(ξ+iη) ∈ Δ} in ℝ^{2n}
    SubspaceReal annihilator_route;  ///< real annihilator of π♯ applied to the real annihilator of Δ
    CMatrix minimal;                 ///< complex span of ξ+iη over A_π
    bool routes_agree() const { return preimage_route == annihilator_route; }
};
APi a_pi_at(const ComplexBivector& pi, const Point& p);

struct PresymplecticData {
    SubspaceReal delta;
    CMatrix omega_re, omega_im;  ///< on the echelon basis of Δ
    CMatrix omega;               ///< Ω(τ,τ') = π(α,α') for preimages α, α'
    bool well_defined = true;    ///< two preimage choices give the same matrices
    bool parts_match = true;     ///< Ω = ω_re + iω_im
};
PresymplecticData presymplectic_at(const ComplexBivector& pi, const Point& p);

struct HatSignCheck {
    CMatrix eps_hat, eps_check;  ///< ε of hat and check of gr(π), on the basis of Δ
    CMatrix omega_re, omega_im;
    bool hat_ok = false;    ///< ε_hat = −ω_im
    bool check_ok = false;  ///< ε_check = −ω_re
    bool literal_ok = false;  ///< ε_hat = −ω_re, reported for comparison only
    bool holds() const { return hat_ok && check_ok; }
};
HatSignCheck hat_sign_check(const ComplexBivector& pi, const Point& p);

struct GcsData {
    CMatrix j;      ///< acts on column vectors (X; ξ)
    CMatrix sigma;  ///< coefficient matrix of π₁π₂⁻¹π₁ + π₂
};
/// J = [[P₁P₂⁻¹, P₁P₂⁻¹P₁ + P₂], [−P₂⁻¹, −P₂⁻¹P₁]]; throws SingularImaginaryPart.
GcsData gcs_matrix(const ComplexBivector& pi, const Point& p);
GcsData gcs_matrix(const CMatrix& p1, const CMatrix& p2);
bool squares_to_minus_identity(const CMatrix& j);
bool preserves_pairing(const CMatrix& j);
/// +i-eigenspace of J as a lagrangian of ℂ^{2n}.
Lagrangian plus_i_eigenspace(const CMatrix& j);

struct TildeFoliation {
    Lagrangian tilde;
    Lagrangian expected;  ///< L(Δ_ℂ, −Ω|Δ)
    bool holds() const { return tilde == expected; }
};
TildeFoliation tilde_foliation_check(const ComplexBivector& pi, const Point& p);

/// σ♯(dx_k) for every coordinate k.
std::vector<MultiField> image_generators(const MultiField& bivector);

struct InvolutivityFailure {
    int i = 0, j = 0;  ///< 0-based generator indices
    Point point;
    MultiField bracket;
};
struct InvolutivityReport {
    std::vector<InvolutivityFailure> failures;
    bool involutive() const { return failures.empty(); }
};
InvolutivityReport involutivity_sample(const std::vector<MultiField>& generators, const std::vector<Point>& points);

}  // namespace cxp

#endif
