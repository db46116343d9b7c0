#ifndef CXPOISSON_NORMAL_FORM_HPP
#define CXPOISSON_NORMAL_FORM_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cxpoisson/dirac.hpp"
#include "cxpoisson/poisson.hpp"

namespace cxp {

/// Moser averaging hit a term whose fiber weight is zero.
struct WeightZero : std::invalid_argument {
    WeightZero(const std::string& what, std::string term) : std::invalid_argument(what), monomial(std::move(term)) {}
    std::string monomial;
};

/// Chart ℝ^b × ℝ^f with base variables first. N is the zero section {fiber = 0}.
class BundleChart {
public:
    BundleChart(std::vector<std::string> base, std::vector<std::string> fiber);

    const Chart& chart() const { return chart_; }
    /// Chart of the base alone; empty optional when b = 0.
    const std::optional<Chart>& base_chart() const { return base_chart_; }
    int base_dim() const { return b_; }
    int fiber_dim() const { return f_; }
    int dim() const { return b_ + f_; }
    bool is_fiber(int k) const { return k >= b_; }

    /// Full point (base values, zeros).
    Point on_zero_section(const Point& base) const;
    Point base_of(const Point& full) const;
    /// Substitution map setting every fiber variable to zero.
    std::map<int, Rational> zero_fiber() const;
    /// (b × n) matrix of the projection onto the base.
    CMatrix projection() const;
    /// (n × b) matrix of the inclusion of the zero section.
    CMatrix inclusion() const;

private:
    int b_, f_;
    Chart chart_;
    std::optional<Chart> base_chart_;
};

/// Coefficient matrix of a 2-form at a point: W_ij = ω(∂_i, ∂_j).
CMatrix two_form_at(const FormField& w, const Point& p);

struct MixedReport {
    std::vector<MultiField> pi2_on_n;  ///< π₂♯(dy_k) restricted to N, one per fiber variable
    std::vector<Point> points;         ///< sampled base points
    std::vector<bool> direct_sum;      ///< π₁(Ann TN) ⊕ TN = TM at each point
    std::vector<bool> cosymplectic;    ///< π(Ann T_ℂN) ⊕ T_ℂN = T_ℂM at each point
    bool pi2_vanishes() const;
    bool mixed() const;
    bool complex_cosymplectic() const;
};
MixedReport mixed_check(const ComplexBivector& pi, const BundleChart& bundle, const std::vector<Point>& base_points);

/// Fiber weight of one monomial term: fiber exponents plus fiber differentials.
int fiber_weight(const BundleChart& bundle, const IndexTuple& idx, const Exponent& e);
/// Scales every monomial by 1/(fiber weight); throws WeightZero.
FormField moser_average(const FormField& beta, const BundleChart& bundle);

struct LocalModel {
    Lagrangian l;
    std::optional<CMatrix> bivector;  ///< present when L ∩ T_ℂ = 0
    /// At zero-section points: L is a graph and its bivector is π_N ⊕ (fiber block)⁻¹.
    std::optional<bool> matches_sum;
};
/// e^{ext} p^! gr(π_N) at a point of the bundle chart; pi_n lives on the base chart.
LocalModel local_model_at(const std::optional<ComplexBivector>& pi_n, const FormField& ext,
                          const BundleChart& bundle, const Point& p);

struct Section {
    MultiField x;
    FormField xi1, xi2;
};

struct SplittingPoint {
    Point point;
    bool graph_ok = false;  ///< e^{B+iω} p^! gr(π_N) = gr(π)
};

struct SplittingReport {
    bool section_in_graph = false;  ///< π♯(ξ₁ + iξ₂) = X
    MultiField graph_residual;      ///< π♯(ξ₁ + iξ₂) − X
    bool vanishes_on_n = false;
    bool euler_linear = false;      ///< fiber-linear part of X is Σ y_k ∂y_k
    std::vector<std::string> warnings;
    bool mixed = false;         ///< N mixed at every sample
    bool cosymplectic = false;  ///< N complex cosymplectic at every sample
    FormField b, omega;             ///< averaged dξ₁ and dξ₂
    std::vector<SplittingPoint> points;
    /// At zero-section samples: (B+iω) on fiber directions against Ω̃ with Ω̃(π♯ξ, π♯ξ') = π(ξ, ξ'),
    /// and against −Ω̃, which is what the graph identity forces with π♯ξ = π(ξ,·).
    bool fiber_equals_omega_tilde = false;
    bool fiber_equals_minus_omega_tilde = false;
    bool graph_holds() const;
    bool passed() const { return section_in_graph && vanishes_on_n && euler_linear && graph_holds(); }
};
/// Runs every step even when a precondition fails so callers can report all of them.
SplittingReport splitting_check(const ComplexBivector& pi, const BundleChart& bundle, const Section& eps,
                                const std::vector<Point>& points);

}  // namespace cxp

#endif
