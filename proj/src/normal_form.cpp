#include "cxpoisson/normal_form.hpp"

namespace cxp {

namespace {

const GaussScalar I = GaussScalar::i();

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

CMatrix coefficient_matrix(const ComplexBivector& pi, const Point& p) {
    const int n = pi.dim();
    CMatrix m = CMatrix::Zero(n, n);
    for (const auto& [idx, v] : pi.body().eval(p)) {
        m(idx[0], idx[1]) = v;
        m(idx[1], idx[0]) = -v;
    }
    return m;
}

// p^! gr(π_N) at the base point of p.
Lagrangian pulled_back_base(const std::optional<CMatrix>& pn, const BundleChart& bundle) {
    if (bundle.base_dim() == 0) return Lagrangian::tangent_space(bundle.dim());
    return image(ImageKind::backward, bundle.projection(), graph(*pn, GraphKind::bivector));
}

}  // namespace

BundleChart::BundleChart(std::vector<std::string> base, std::vector<std::string> fiber)
    : b_(static_cast<int>(base.size())), f_(static_cast<int>(fiber.size())), chart_(concat(base, fiber)) {
    if (b_ > 0) base_chart_ = Chart(base);
}

Point BundleChart::on_zero_section(const Point& base) const {
    if (static_cast<int>(base.size()) != b_) throw DimensionMismatch("base point has the wrong length");
    Point p = base;
    p.resize(static_cast<std::size_t>(dim()), Rational(0));
    return p;
}

Point BundleChart::base_of(const Point& full) const {
    return Point(full.begin(), full.begin() + b_);
}

std::map<int, Rational> BundleChart::zero_fiber() const {
    std::map<int, Rational> m;
    for (int k = b_; k < dim(); ++k) m[k] = 0;
    return m;
}

CMatrix BundleChart::projection() const {
    CMatrix a = CMatrix::Zero(b_, dim());
    for (int k = 0; k < b_; ++k) a(k, k) = GaussScalar(1);
    return a;
}

CMatrix BundleChart::inclusion() const { return projection().transpose(); }

CMatrix two_form_at(const FormField& w, const Point& p) {
    const int n = w.chart().dim();
    CMatrix m = CMatrix::Zero(n, n);
    for (const auto& [idx, v] : w.eval(p)) {
        m(idx[0], idx[1]) = v;
        m(idx[1], idx[0]) = -v;
    }
    return m;
}

bool MixedReport::pi2_vanishes() const {
    for (const auto& v : pi2_on_n)
        if (!v.is_zero()) return false;
    return true;
}

bool MixedReport::mixed() const {
    if (!pi2_vanishes()) return false;
    for (bool b : direct_sum)
        if (!b) return false;
    return true;
}

bool MixedReport::complex_cosymplectic() const {
    for (bool b : cosymplectic)
        if (!b) return false;
    return true;
}

MixedReport mixed_check(const ComplexBivector& pi, const BundleChart& bundle, const std::vector<Point>& base_points) {
    if (!(pi.chart() == bundle.chart())) throw ChartMismatch("bivector and bundle charts differ");
    const int n = bundle.dim(), b = bundle.base_dim();
    MixedReport r;
    const auto zero = bundle.zero_fiber();
    for (int k = b; k < n; ++k)
        r.pi2_on_n.push_back(contract(FormField::coordinate(bundle.chart(), k), pi.pi2()).substitute(zero));
    for (const auto& bp : base_points) {
        Point p = bundle.on_zero_section(bp);
        CMatrix m = coefficient_matrix(pi, p);
        // Rows: π♯(dy_k) for fiber k, then the base directions spanning TN.
        auto spans = [&](const CMatrix& coeffs) {
            CMatrix rows = CMatrix::Zero(n, n);
            for (int k = b; k < n; ++k) rows.row(k - b) = coeffs.row(k);
            for (int j = 0; j < b; ++j) rows(n - b + j, j) = GaussScalar(1);
            return rank(rows) == n;
        };
        r.points.push_back(bp);
        r.direct_sum.push_back(spans(real_part(m)));
        r.cosymplectic.push_back(spans(m));
    }
    return r;
}

int fiber_weight(const BundleChart& bundle, const IndexTuple& idx, const Exponent& e) {
    int w = 0;
    for (int k = bundle.base_dim(); k < bundle.dim(); ++k) w += static_cast<int>(e[static_cast<std::size_t>(k)]);
    for (int k : idx)
        if (bundle.is_fiber(k)) ++w;
    return w;
}

FormField moser_average(const FormField& beta, const BundleChart& bundle) {
    if (!(beta.chart() == bundle.chart())) throw ChartMismatch("form and bundle charts differ");
    FormField out(beta.chart(), beta.degree());
    for (const auto& [idx, coeff] : beta.comps()) {
        Poly scaled(beta.chart());
        for (const auto& [e, c] : coeff.terms()) {
            const int w = fiber_weight(bundle, idx, e);
            Poly mono = Poly::monomial(beta.chart(), e, c);
            if (w == 0) {
                FormField term(beta.chart(), beta.degree());
                term.add(idx, mono);
                throw WeightZero("form does not vanish on the zero section: term " + term.str() + " has fiber weight 0",
                                 term.str());
            }
            scaled += mono * GaussScalar(Rational(1, w));
        }
        out.add(idx, scaled);
    }
    return out;
}

LocalModel local_model_at(const std::optional<ComplexBivector>& pi_n, const FormField& ext,
                          const BundleChart& bundle, const Point& p) {
    const int n = bundle.dim(), b = bundle.base_dim(), f = bundle.fiber_dim();
    std::optional<CMatrix> pn;
    if (b > 0) {
        if (!pi_n || !(pi_n->chart() == *bundle.base_chart()))
            throw ChartMismatch("base bivector must live on the base chart");
        pn = coefficient_matrix(*pi_n, bundle.base_of(p));
    }
    CMatrix w = two_form_at(ext, p);
    LocalModel m;
    m.l = b_field(w, pulled_back_base(pn, bundle));
    m.bivector = bivector_of(m.l);
    bool on_zero = true;
    for (int k = b; k < n; ++k) on_zero = on_zero && p[static_cast<std::size_t>(k)] == 0;
    if (on_zero) {
        auto inv = inverse(CMatrix(w.bottomRightCorner(f, f)));
        bool ok = m.bivector.has_value() && inv.has_value();
        if (ok) {
            CMatrix expected = CMatrix::Zero(n, n);
            if (b > 0) expected.topLeftCorner(b, b) = *pn;
            expected.bottomRightCorner(f, f) = *inv;
            ok = *m.bivector == expected;
        }
        m.matches_sum = ok;
    }
    return m;
}

bool SplittingReport::graph_holds() const {
    if (points.empty()) return false;
    for (const auto& p : points)
        if (!p.graph_ok) return false;
    return true;
}

SplittingReport splitting_check(const ComplexBivector& pi, const BundleChart& bundle, const Section& eps,
                                const std::vector<Point>& points) {
    if (!(pi.chart() == bundle.chart())) throw ChartMismatch("bivector and bundle charts differ");
    const int n = bundle.dim(), b = bundle.base_dim(), f = bundle.fiber_dim();
    const Chart& c = bundle.chart();
    const auto zero = bundle.zero_fiber();
    SplittingReport r;

    FormField alpha = eps.xi1 + eps.xi2 * I;
    r.graph_residual = pi.sharp(alpha) - eps.x;
    r.section_in_graph = r.graph_residual.is_zero();
    r.vanishes_on_n = eps.x.substitute(zero).is_zero() && eps.xi1.substitute(zero).is_zero() &&
                      eps.xi2.substitute(zero).is_zero();

    r.euler_linear = true;
    for (int k = b; k < n; ++k) {
        const Poly comp = eps.x.coeff(k);
        for (int m = b; m < n; ++m) {
            Poly lin = comp.partial(m).substitute(zero);
            if (lin != Poly(c, GaussScalar(k == m ? 1 : 0))) r.euler_linear = false;
        }
    }
    bool higher = false;
    for (int k = 0; k < n; ++k) {
        const Poly comp = eps.x.coeff(k);
        for (const auto& [e, v] : comp.terms()) {
            int deg = 0;
            for (int m = b; m < n; ++m) deg += static_cast<int>(e[static_cast<std::size_t>(m)]);
            higher = higher || deg >= 2;
        }
    }
    if (higher) r.warnings.push_back("X has fiber terms of order >= 2; only the linear part is checked");

    std::vector<Point> base_points;
    for (const auto& p : points) base_points.push_back(bundle.base_of(p));
    MixedReport mixed = mixed_check(pi, bundle, base_points);
    r.mixed = mixed.mixed();
    r.cosymplectic = mixed.complex_cosymplectic();

    r.b = moser_average(d_complex(eps.xi1), bundle);
    r.omega = moser_average(d_complex(eps.xi2), bundle);
    const FormField total = r.b + r.omega * I;

    bool fiber_tilde = true, fiber_minus = true;
    for (const auto& p : points) {
        const Point pn = bundle.on_zero_section(bundle.base_of(p));
        std::optional<CMatrix> ln;
        if (b > 0) {
            // π_N is read off from the pullback of gr(π) to N.
            Lagrangian l_n = image(ImageKind::backward, bundle.inclusion(),
                                   graph(coefficient_matrix(pi, pn), GraphKind::bivector));
            ln = bivector_of(l_n);
        }
        SplittingPoint sp{p, false};
        if (b == 0 || ln) {
            Lagrangian model = b_field(two_form_at(total, p), pulled_back_base(ln, bundle));
            sp.graph_ok = model == graph(coefficient_matrix(pi, p), GraphKind::bivector);
        }
        r.points.push_back(sp);

        CMatrix pff = coefficient_matrix(pi, pn).bottomRightCorner(f, f);
        CMatrix fiber = two_form_at(total, pn).bottomRightCorner(f, f);
        auto inv = inverse(pff);
        if (!inv) {
            fiber_tilde = fiber_minus = false;
            continue;
        }
        const CMatrix omega_tilde = -*inv;
        fiber_tilde = fiber_tilde && fiber == omega_tilde;
        fiber_minus = fiber_minus && fiber == CMatrix(-omega_tilde);
    }
    r.fiber_equals_omega_tilde = !points.empty() && fiber_tilde;
    r.fiber_equals_minus_omega_tilde = !points.empty() && fiber_minus;
    return r;
}

}  // namespace cxp
