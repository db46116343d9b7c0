#ifndef CXPOISSON_POISSON_HPP
#define CXPOISSON_POISSON_HPP

#include <string>
#include <vector>

#include "cxpoisson/multivector.hpp"

namespace cxp {

/// Degree-2 complex multivector π = π₁ + iπ₂ with its real parts cached.
class ComplexBivector {
public:
    ComplexBivector() = default;
    explicit ComplexBivector(MultiField body);
    static ComplexBivector from_parts(const MultiField& pi1, const MultiField& pi2);
    /// Zero bivector on a chart.
    static ComplexBivector zero(const Chart& chart) { return ComplexBivector(MultiField(chart, 2)); }

    const Chart& chart() const { return body_.chart(); }
    int dim() const { return chart().dim(); }
    const MultiField& body() const { return body_; }
    const MultiField& pi1() const { return pi1_; }
    const MultiField& pi2() const { return pi2_; }

    /// Coefficient π_ij with π_ji = −π_ij.
    Poly coeff(int i, int j) const;
    /// π♯(α) = ι_α π, contraction in the first slot.
    MultiField sharp(const FormField& alpha) const { return contract(alpha, body_); }
    /// π(α, β) = β(π♯α).
    Poly pair(const FormField& alpha, const FormField& beta) const;

    std::string str() const { return body_.str(); }
    friend bool operator==(const ComplexBivector& a, const ComplexBivector& b) { return a.body_ == b.body_; }

private:
    MultiField body_, pi1_, pi2_;
};

/// Square matrix of polynomials (row-major).
struct PolyMatrix {
    int rows = 0, cols = 0;
    std::vector<Poly> data;

    PolyMatrix() = default;
    PolyMatrix(const Chart& chart, int r, int c)
        : rows(r), cols(c), data(static_cast<std::size_t>(r * c), Poly(chart)) {}
    static PolyMatrix identity(const Chart& chart, int n);

    Poly& operator()(int r, int c) { return data[static_cast<std::size_t>(r * cols + c)]; }
    const Poly& operator()(int r, int c) const { return data[static_cast<std::size_t>(r * cols + c)]; }
    bool is_zero() const;
};

/// [π, π].
MultiField jacobi_residual(const ComplexBivector& pi);
inline bool is_poisson(const ComplexBivector& pi) { return jacobi_residual(pi).is_zero(); }

struct PairConditions {
    MultiField cross;       ///< [π₁, π₂]
    MultiField difference;  ///< [π₁, π₁] − [π₂, π₂]
    bool vanish() const { return cross.is_zero() && difference.is_zero(); }
};
PairConditions pair_conditions(const ComplexBivector& pi);

struct PdeResidual {
    int i, j, k;  ///< 0-based, i < j < k
    int s;        ///< 1: real equation, 2: imaginary equation
    Poly value;
};
/// Both coordinate Jacobi equations for every index triple. For each triple,
/// [π,π]_{ijk} = 2 (R₁ + iR₂).
std::vector<PdeResidual> jacobi_pde_residuals(const ComplexBivector& pi);

/// {f, g} = π(T_ℂf, T_ℂg).
Poly bracket_of_functions(const ComplexBivector& pi, const Poly& f, const Poly& g);
MultiField bracket_of_functions(const ComplexBivector& pi, const MultiField& f, const MultiField& g);

/// X_h with X_h(f) = {f, h}; equals −π♯(T_ℂh).
MultiField hamiltonian(const ComplexBivector& pi, const Poly& h);
MultiField hamiltonian(const ComplexBivector& pi, const MultiField& h);

/// π♯(T_ℂc); vanishes iff c is a Casimir.
MultiField casimir_residual(const ComplexBivector& pi, const Poly& c);
MultiField casimir_residual(const ComplexBivector& pi, const MultiField& c);

/// [α,β]_π = L_{π♯α}β − L_{π♯β}α − T_ℂπ(α,β).
FormField cotangent_bracket(const ComplexBivector& pi, const FormField& a, const FormField& b);

/// N*α for a (1,1)-tensor given as matrix N_{ij} = dx_i(N ∂_j).
FormField dual_apply(const PolyMatrix& n, const FormField& alpha);

namespace construct {
ComplexBivector complexify(const MultiField& sigma);
ComplexBivector twist(const MultiField& sigma);
ComplexBivector diagonal(const MultiField& sigma);
ComplexBivector conjugate(const ComplexBivector& pi);
ComplexBivector two_param(const MultiField& pi1, const MultiField& pi2, const Rational& mu, const Rational& lambda);
/// σ + iσ_N with σ_N♯ = N∘σ♯; throws when N∘σ♯ is not skew.
ComplexBivector nijenhuis(const MultiField& sigma, const PolyMatrix& n);
}  // namespace construct

struct NijenhuisResiduals {
    PolyMatrix compat;                ///< σ♯∘N* − N∘σ♯
    std::vector<FormField> bracket;   ///< one per coordinate pair a < b; empty when compat fails
    bool holds() const;
};
NijenhuisResiduals nijenhuis_residuals(const MultiField& sigma, const PolyMatrix& n);

/// Matrix of σ♯ in coordinates: column j is σ♯(dx_j).
PolyMatrix sharp_matrix(const MultiField& sigma);

namespace catalog {
/// {x,y} = 1+ia, {x,z} = ib, {y,z} = y + i(−ay + ((1+a²)/b) z) on the chart (x, y, z).
ComplexBivector nb(const Chart& xyz, const Rational& a, const Rational& b);
/// x₃∂₁∧∂₂ + i x₁∂₂∧∂₃ on a 3-dimensional chart.
ComplexBivector bihamiltonian(const Chart& chart3);
}  // namespace catalog

}  // namespace cxp

#endif
