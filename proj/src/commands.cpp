#include "cxpoisson/commands.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "cxpoisson/geometry.hpp"
#include "cxpoisson/normal_form.hpp"
#include "cxpoisson/poisson.hpp"

namespace cxp {

std::vector<std::string> requested_checks(const std::string& command, const ProblemFile& pf, const RunOptions& opts) {
    const auto& ids = check_ids_for(command);
    auto known = [&](const std::string& id) { return std::find(ids.begin(), ids.end(), id) != ids.end(); };
    std::vector<std::string> wanted;
    if (!opts.checks.empty()) {
        for (const auto& c : opts.checks) {
            if (!known(c)) throw std::invalid_argument("check '" + c + "' does not belong to '" + command + "'");
            wanted.push_back(c);
        }
    } else {
        for (const auto& c : pf.checks)
            if (known(c)) wanted.push_back(c);
    }
    if (!wanted.empty()) {
        // Table order, each id once.
        std::vector<std::string> r;
        for (const auto& id : ids)
            if (std::find(wanted.begin(), wanted.end(), id) != wanted.end()) r.push_back(id);
        return r;
    }
    if (command == "invariants")
        return {"rank_profile", "real_index", "a_pi", "presymplectic", "hat_sign", "tilde_foliation", "gcs"};
    if (command == "normal-form") {
        std::vector<std::string> r{"mixed"};
        if (!pf.moser.empty()) r.push_back("moser");
        if (pf.section) r.push_back("splitting");
        return r;
    }
    return ids;
}

namespace {

using Clock = std::chrono::steady_clock;

bool wants(const std::vector<std::string>& ids, const std::string& id) {
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::string poly_text(const MultiField& m) { return m.is_zero() ? "0" : m.str(); }
std::string poly_text(const FormField& m) { return m.is_zero() ? "0" : m.str(); }

/// Runs one record body, timing it and turning exceptions into refusals.
Record run_record(const std::string& check, const std::string& subject, ojson inputs, const RunOptions& opts,
                  const std::function<void(Record&)>& body) {
    Record r;
    r.check = check;
    r.subject = subject;
    r.inputs = std::move(inputs);
    auto t0 = Clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.verdict = Verdict::refused;
        r.reason = e.what();
    }
    if (opts.timing) r.timing_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return r;
}

ojson bivector_inputs(const std::string& name, const MultiField& m) {
    ojson in;
    in["bivector"] = name;
    in["expression"] = poly_text(m);
    return in;
}

std::vector<Point> user_points(const ProblemFile& pf, const RunOptions& opts) {
    std::vector<Point> pts = pf.points;
    pts.insert(pts.end(), opts.extra_points.begin(), opts.extra_points.end());
    return pts;
}

std::vector<Point> sample_points(const ProblemFile& pf, const RunOptions& opts) {
    std::vector<Point> pts = default_grid(pf.chart.dim(), opts.grid_size);
    for (const auto& p : user_points(pf, opts))
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    return pts;
}

ojson components_json(const MultiField& m) {
    ojson arr = ojson::array();
    for (const auto& [idx, c] : m.comps()) arr.push_back(ojson{{"basis", m.basis_label(idx)}, {"value", c.str()}});
    return arr;
}

}  // namespace

Report cmd_check(const ProblemFile& pf, const RunOptions& opts) {
    const auto ids = requested_checks("check", pf, opts);
    Report rep;
    for (const auto& [name, body] : pf.bivectors) {
        const ComplexBivector pi(body);
        ojson in = bivector_inputs(name, body);
        if (wants(ids, "jacobi"))
            rep.records.push_back(run_record("jacobi", name, in, opts, [&](Record& r) {
                MultiField res = jacobi_residual(pi);
                r.verdict = res.is_zero() ? Verdict::pass : Verdict::fail;
                r.witnesses["residual"] = poly_text(res);
                r.witnesses["nonzero_components"] = components_json(res);
            }));
        if (wants(ids, "pair_conditions"))
            rep.records.push_back(run_record("pair_conditions", name, in, opts, [&](Record& r) {
                PairConditions pc = pair_conditions(pi);
                r.verdict = pc.vanish() ? Verdict::pass : Verdict::fail;
                r.witnesses["cross"] = poly_text(pc.cross);
                r.witnesses["difference"] = poly_text(pc.difference);
            }));
        if (wants(ids, "pde"))
            rep.records.push_back(run_record("pde", name, in, opts, [&](Record& r) {
                auto eqs = jacobi_pde_residuals(pi);
                ojson bad = ojson::array();
                for (const auto& e : eqs) {
                    if (e.value.is_zero()) continue;
                    bad.push_back(ojson{{"triple", {pf.chart.var(e.i), pf.chart.var(e.j), pf.chart.var(e.k)}},
                                        {"equation", e.s == 1 ? "real" : "imaginary"},
                                        {"value", e.value.str()}});
                }
                r.verdict = bad.empty() ? Verdict::pass : Verdict::fail;
                r.witnesses["equations"] = eqs.size();
                r.witnesses["nonzero"] = bad;
            }));
    }
    return rep;
}

Report cmd_invariants(const ProblemFile& pf, const RunOptions& opts) {
    const auto ids = requested_checks("invariants", pf, opts);
    const bool gcs_explicit = !opts.checks.empty() ? wants(opts.checks, "gcs") : wants(pf.checks, "gcs");
    const std::vector<Point> pts = sample_points(pf, opts);
    const int n = pf.chart.dim();
    Report rep;
    for (const auto& [name, body] : pf.bivectors) {
        const ComplexBivector pi(body);
        ojson in = bivector_inputs(name, body);
        in["points"] = pts.size();

        // Always computed: the real index decides whether the structure is generalized complex.
        SampleReport sr = sample_profiles(pi, pts);
        const bool real_index_zero = std::all_of(sr.profiles.begin(), sr.profiles.end(),
                                                 [](const RankProfile& p) { return p.real_index == 0; });

        if (wants(ids, "rank_profile"))
            rep.records.push_back(run_record("rank_profile", name, in, opts, [&](Record& r) {
                ojson rows = ojson::array();
                for (const auto& p : sr.profiles)
                    rows.push_back(ojson{{"point", to_json(p.point)},
                                         {"dim_E", p.dim_E},
                                         {"dim_Delta", p.dim_Delta},
                                         {"dim_D", p.dim_D},
                                         {"real_index", p.real_index},
                                         {"order", p.order},
                                         {"quasi_real", p.quasi_real_sample}});
                r.witnesses["profiles"] = rows;
                r.witnesses["regular_sample"] = sr.regular;
                r.witnesses["strongly_regular_sample"] = sr.strongly_regular;
                r.witnesses["quasi_real_sample"] = sr.quasi_real;
            }));
        if (wants(ids, "real_index"))
            rep.records.push_back(run_record("real_index", name, in, opts, [&](Record& r) {
                bool ok = true;
                ojson rows = ojson::array();
                for (std::size_t k = 0; k < pts.size(); ++k) {
                    BivectorParts parts = bivector_at(pi, pts[k]);
                    Index nullity = n - rank(parts.pi2);
                    Index graph_real = real_part_of(graph(coefficient_matrix_at(pi, pts[k]), GraphKind::bivector)).dim();
                    Index profile = sr.profiles[k].real_index;
                    ok = ok && nullity == graph_real && graph_real == profile;
                    rows.push_back(ojson{{"point", to_json(pts[k])},
                                         {"nullity_pi2", nullity},
                                         {"graph_real_part", graph_real},
                                         {"profile", profile}});
                }
                r.verdict = ok ? Verdict::pass : Verdict::fail;
                r.witnesses["routes"] = rows;
            }));
        if (wants(ids, "a_pi"))
            rep.records.push_back(run_record("a_pi", name, in, opts, [&](Record& r) {
                bool ok = true;
                ojson rows = ojson::array();
                for (const auto& p : pts) {
                    APi a = a_pi_at(pi, p);
                    ok = ok && a.routes_agree();
                    rows.push_back(ojson{{"point", to_json(p)},
                                         {"dim_real", a.preimage_route.dim()},
                                         {"routes_agree", a.routes_agree()}});
                }
                r.verdict = ok ? Verdict::pass : Verdict::fail;
                r.witnesses["a_pi"] = rows;
            }));
        if (wants(ids, "presymplectic"))
            rep.records.push_back(run_record("presymplectic", name, in, opts, [&](Record& r) {
                bool ok = true;
                ojson rows = ojson::array();
                for (const auto& p : pts) {
                    PresymplecticData d = presymplectic_at(pi, p);
                    ok = ok && d.well_defined && d.parts_match;
                    rows.push_back(ojson{{"point", to_json(p)},
                                         {"delta", to_json(d.delta)},
                                         {"omega_re", to_json(d.omega_re)},
                                         {"omega_im", to_json(d.omega_im)},
                                         {"well_defined", d.well_defined}});
                }
                r.verdict = ok ? Verdict::pass : Verdict::fail;
                r.witnesses["forms"] = rows;
            }));
        if (wants(ids, "hat_sign"))
            rep.records.push_back(run_record("hat_sign", name, in, opts, [&](Record& r) {
                bool ok = true;
                ojson rows = ojson::array();
                for (const auto& p : pts) {
                    HatSignCheck h = hat_sign_check(pi, p);
                    ok = ok && h.holds();
                    rows.push_back(ojson{{"point", to_json(p)},
                                         {"eps_hat_is_minus_omega_im", h.hat_ok},
                                         {"eps_check_is_minus_omega_re", h.check_ok},
                                         {"eps_hat_is_minus_omega_re", h.literal_ok}});
                }
                r.verdict = ok ? Verdict::pass : Verdict::fail;
                r.witnesses["signs"] = rows;
            }));
        if (wants(ids, "tilde_foliation"))
            rep.records.push_back(run_record("tilde_foliation", name, in, opts, [&](Record& r) {
                bool ok = true;
                ojson rows = ojson::array();
                for (const auto& p : pts) {
                    TildeFoliation t = tilde_foliation_check(pi, p);
                    ok = ok && t.holds();
                    ojson row{{"point", to_json(p)}, {"equal", t.holds()}};
                    if (!t.holds()) {
                        row["tilde"] = to_json(t.tilde);
                        row["expected"] = to_json(t.expected);
                    }
                    rows.push_back(row);
                }
                r.verdict = ok ? Verdict::pass : Verdict::fail;
                r.witnesses["points"] = rows;
                if (!pts.empty()) r.witnesses["tilde_at_first_point"] = to_json(tilde_foliation_check(pi, pts[0]).tilde);
            }));
        if (wants(ids, "gcs") && (real_index_zero || gcs_explicit))
            rep.records.push_back(run_record("gcs", name, in, opts, [&](Record& r) {
                if (!real_index_zero) {
                    r.verdict = Verdict::refused;
                    r.reason = "real index is positive at some sample point; π₂ is not invertible";
                    return;
                }
                bool ok = true;
                ojson rows = ojson::array();
                for (const auto& p : pts) {
                    GcsData g = gcs_matrix(pi, p);
                    bool sq = squares_to_minus_identity(g.j);
                    bool pr = preserves_pairing(g.j);
                    bool eig = plus_i_eigenspace(g.j) == graph(coefficient_matrix_at(pi, p), GraphKind::bivector);
                    ok = ok && sq && pr && eig;
                    rows.push_back(ojson{{"point", to_json(p)},
                                         {"squares_to_minus_identity", sq},
                                         {"preserves_pairing", pr},
                                         {"eigenspace_is_graph", eig}});
                }
                r.verdict = ok ? Verdict::pass : Verdict::fail;
                if (!pts.empty()) r.witnesses["gcs_matrix_at_first_point"] = to_json(gcs_matrix(pi, pts[0]).j);
                r.witnesses["points"] = rows;
            }));
        if (wants(ids, "involutivity"))
            rep.records.push_back(run_record("involutivity", name, in, opts, [&](Record& r) {
                bool ok = true;
                for (const auto& [label, part] : {std::pair{"im_pi1", &pi.pi1()}, std::pair{"im_pi2", &pi.pi2()}}) {
                    InvolutivityReport inv = involutivity_sample(image_generators(*part), pts);
                    ojson w{{"involutive", inv.involutive()}};
                    if (!inv.involutive()) {
                        const auto& f = inv.failures.front();
                        w["first_failure"] = ojson{{"generators", {"♯d" + pf.chart.var(f.i), "♯d" + pf.chart.var(f.j)}},
                                                   {"point", to_json(f.point)},
                                                   {"bracket", poly_text(f.bracket)}};
                        w["failures"] = inv.failures.size();
                    }
                    ok = ok && inv.involutive();
                    r.witnesses[label] = w;
                }
                r.verdict = ok ? Verdict::pass : Verdict::fail;
            }));
    }
    return rep;
}

namespace {

struct PipelineState {
    Lagrangian cur;
    std::map<std::string, Lagrangian> registers;
    std::string last_bivector;
};

ProductKind product_kind(const std::string& s) {
    if (s == "tangent") return ProductKind::tangent;
    if (s == "cotangent") return ProductKind::cotangent;
    if (s == "complex_tangent") return ProductKind::complex_tangent;
    return ProductKind::complex_cotangent;
}

/// Applies one step; returns its witness. Sets *compared when the step is a comparison.
ojson apply_step(const ProblemFile& pf, const PipelineStep& st, const Point& p, PipelineState& s,
                 std::optional<bool>& compared) {
    ojson w;
    w["op"] = st.op;
    for (const auto& [k, v] : st.args) w[k] = v;
    const std::string& op = st.op;
    auto bivector_matrix = [&](const std::string& name) {
        return coefficient_matrix_at(ComplexBivector(pf.bivector(name)), p);
    };
    auto real_result = [&](const SubspaceReal& r) {
        s.cur = complexify(r);
        w["basis"] = to_json(r);
    };
    if (op == "graph") {
        if (const std::string* b = st.arg("bivector")) {
            s.cur = graph(bivector_matrix(*b), GraphKind::bivector);
            s.last_bivector = *b;
        } else {
            s.cur = graph(two_form_at(pf.form(*st.arg("form")), p), GraphKind::twoform);
        }
    } else if (op == "hat") {
        real_result(hat(s.cur));
        return w;
    } else if (op == "check") {
        real_result(check(s.cur));
        return w;
    } else if (op == "hat_cot") {
        real_result(hat_cot(s.cur));
        return w;
    } else if (op == "check_cot") {
        real_result(check_cot(s.cur));
        return w;
    } else if (op == "real_part") {
        real_result(real_part_of(s.cur));
        return w;
    } else if (op == "tilde") {
        s.cur = tilde(s.cur);
    } else if (op == "tilde_cot") {
        s.cur = tilde_cot(s.cur);
    } else if (op == "conjugate") {
        s.cur = conjugate(s.cur);
    } else if (op == "indices") {
        Indices ix = indices(s.cur);
        w["real_index"] = ix.real_index;
        w["dim_range"] = ix.dim_range;
        w["dim_Delta"] = ix.dim_delta;
        w["dim_D"] = ix.dim_D;
        w["kernel_dim"] = ix.kernel_dim;
        w["quasi_real"] = is_quasi_real(s.cur);
        return w;
    } else if (op == "product") {
        s.cur = product(product_kind(*st.arg("kind")), s.cur, s.registers.at(*st.arg("with")));
    } else if (op == "b_field") {
        s.cur = b_field(two_form_at(pf.form(*st.arg("form")), p), s.cur);
    } else if (op == "beta") {
        s.cur = beta(bivector_matrix(*st.arg("bivector")), s.cur);
    } else if (op == "scalar_dot" || op == "scalar_bullet") {
        GaussScalar z = Poly::parse(pf.chart, *st.arg("z")).constant_term();
        s.cur = op == "scalar_dot" ? scalar_dot(z, s.cur) : scalar_bullet(z, s.cur);
    } else if (op == "image") {
        std::vector<std::string> base(pf.chart.vars().begin(), pf.chart.vars().end() - static_cast<long>(pf.zero.size()));
        BundleChart bundle(base, pf.zero);
        CMatrix a = *st.arg("map") == "inclusion" ? bundle.inclusion() : bundle.projection();
        s.cur = image(*st.arg("kind") == "backward" ? ImageKind::backward : ImageKind::forward, a, s.cur);
    } else if (op == "store") {
        s.registers[*st.arg("as")] = s.cur;
        return w;
    } else if (op == "load") {
        s.cur = s.registers.at(*st.arg("from"));
    } else if (op == "compare") {
        Lagrangian target;
        const std::string* with = st.arg("with");
        if (with && *with == "tilde_foliation") {
            const std::string* src = st.arg("source");
            target = tilde_foliation_check(ComplexBivector(pf.bivector(src ? *src : s.last_bivector)), p).expected;
        } else if (with) {
            target = s.registers.at(*with);
        } else if (const std::string* b = st.arg("bivector")) {
            target = graph(bivector_matrix(*b), GraphKind::bivector);
        } else {
            target = graph(two_form_at(pf.form(*st.arg("form")), p), GraphKind::twoform);
        }
        compared = s.cur == target;
        w["equal"] = *compared;
        if (!*compared) {
            w["current"] = to_json(s.cur);
            w["expected"] = to_json(target);
        }
        return w;
    }
    w["basis"] = to_json(s.cur);
    return w;
}

}  // namespace

Report cmd_dirac(const ProblemFile& pf, const RunOptions& opts) {
    const auto ids = requested_checks("dirac", pf, opts);
    Report rep;
    if (!wants(ids, "dirac")) return rep;
    for (const auto& pl : pf.pipelines) {
        std::vector<Point> pts = pl.points.empty() ? user_points(pf, opts) : pl.points;
        ojson in;
        ojson ops = ojson::array();
        for (const auto& st : pl.steps) ops.push_back(st.op);
        in["steps"] = ops;
        in["points"] = pts.size();
        rep.records.push_back(run_record("dirac", pl.name, in, opts, [&](Record& r) {
            if (pts.empty()) {
                r.verdict = Verdict::refused;
                r.reason = "no sample points: give 'points' in the pipeline or file, or --points";
                return;
            }
            bool ok = true;
            ojson per_point = ojson::array();
            for (const auto& p : pts) {
                PipelineState state;
                ojson steps = ojson::array();
                for (std::size_t k = 0; k < pl.steps.size(); ++k) {
                    std::optional<bool> cmp;
                    try {
                        steps.push_back(apply_step(pf, pl.steps[k], p, state, cmp));
                    } catch (const std::exception& e) {
                        throw std::runtime_error("step " + std::to_string(k + 1) + " (" + pl.steps[k].op + ") at " +
                                                 to_json(p).dump() + ": " + e.what());
                    }
                    if (cmp) ok = ok && *cmp;
                }
                per_point.push_back(ojson{{"point", to_json(p)}, {"steps", steps}});
            }
            r.verdict = ok ? Verdict::pass : Verdict::fail;
            r.witnesses["points"] = per_point;
        }));
    }
    return rep;
}

Report cmd_normal_form(const ProblemFile& pf, const RunOptions& opts) {
    const auto ids = requested_checks("normal-form", pf, opts);
    Report rep;
    if (pf.zero.empty()) {
        for (const auto& id : ids)
            rep.records.push_back(run_record(id, "", ojson::object(), opts, [](Record& r) {
                r.verdict = Verdict::refused;
                r.reason = "no submanifold: give 'submanifold': {'zero': [...]}";
            }));
        return rep;
    }
    std::vector<std::string> base(pf.chart.vars().begin(), pf.chart.vars().end() - static_cast<long>(pf.zero.size()));
    const BundleChart bundle(base, pf.zero);
    const std::vector<Point> user = user_points(pf, opts);

    std::vector<Point> base_points = default_grid(bundle.base_dim(), opts.grid_size);
    for (const auto& p : user) {
        Point b = bundle.base_of(p);
        if (std::find(base_points.begin(), base_points.end(), b) == base_points.end()) base_points.push_back(b);
    }
    std::vector<Point> full_points;
    for (const auto& b : base_points) full_points.push_back(bundle.on_zero_section(b));
    for (const auto& p : default_grid(bundle.dim(), opts.grid_size)) full_points.push_back(p);
    for (const auto& p : user)
        if (std::find(full_points.begin(), full_points.end(), p) == full_points.end()) full_points.push_back(p);

    ojson sub{{"zero", pf.zero}};
    std::map<std::string, MixedReport> mixed;
    auto mixed_for = [&](const std::string& name) -> const MixedReport& {
        auto it = mixed.find(name);
        if (it == mixed.end())
            it = mixed.emplace(name, mixed_check(ComplexBivector(pf.bivector(name)), bundle, base_points)).first;
        return it->second;
    };
    auto mixed_reason = [](const MixedReport& m) {
        std::string why;
        if (!m.pi2_vanishes()) why = "π₂ does not vanish on Ann TN";
        bool ds = std::all_of(m.direct_sum.begin(), m.direct_sum.end(), [](bool b) { return b; });
        if (!ds) why += std::string(why.empty() ? "" : "; ") + "π₁(Ann TN) ⊕ TN ≠ TM at some sample point";
        return why;
    };

    if (wants(ids, "mixed"))
        for (const auto& [name, body] : pf.bivectors) {
            ojson in = bivector_inputs(name, body);
            in["submanifold"] = sub;
            in["base_points"] = base_points.size();
            rep.records.push_back(run_record("mixed", name, in, opts, [&](Record& r) {
                const MixedReport& m = mixed_for(name);
                r.verdict = m.mixed() ? Verdict::pass : Verdict::fail;
                ojson restricted = ojson::array();
                for (const auto& f : m.pi2_on_n) restricted.push_back(poly_text(f));
                r.witnesses["pi2_sharp_on_fiber_covectors"] = restricted;
                r.witnesses["pi2_vanishes"] = m.pi2_vanishes();
                r.witnesses["direct_sum_everywhere"] =
                    std::all_of(m.direct_sum.begin(), m.direct_sum.end(), [](bool b) { return b; });
                r.witnesses["complex_cosymplectic"] = m.complex_cosymplectic();
                if (!m.mixed()) r.witnesses["why_not"] = mixed_reason(m);
            }));
        }

    if (wants(ids, "moser")) {
        if (pf.moser.empty())
            rep.records.push_back(run_record("moser", "", ojson::object(), opts, [](Record& r) {
                r.verdict = Verdict::refused;
                r.reason = "no forms listed under 'moser'";
            }));
        for (const auto& name : pf.moser) {
            const FormField& f = pf.form(name);
            ojson in{{"form", name}, {"expression", poly_text(f)}, {"submanifold", sub}};
            rep.records.push_back(run_record("moser", name, in, opts, [&](Record& r) {
                try {
                    r.witnesses["average"] = poly_text(moser_average(f, bundle));
                } catch (const WeightZero& e) {
                    r.verdict = Verdict::refused;
                    r.reason = "weight: fiber weight zero at monomial " + e.monomial;
                    r.witnesses["monomial"] = e.monomial;
                }
            }));
        }
    }

    if (wants(ids, "splitting")) {
        std::string name = pf.section ? (pf.section->bivector.empty() && !pf.bivectors.empty()
                                             ? pf.bivectors.front().first
                                             : pf.section->bivector)
                                      : "";
        ojson in;
        if (pf.section) {
            in = bivector_inputs(name, pf.bivector(name));
            in["submanifold"] = sub;
            in["X"] = poly_text(pf.vector(pf.section->x));
            in["xi1"] = poly_text(pf.form(pf.section->xi1));
            in["xi2"] = poly_text(pf.form(pf.section->xi2));
            in["points"] = full_points.size();
        }
        rep.records.push_back(run_record("splitting", name, in, opts, [&](Record& r) {
            if (!pf.section) {
                r.verdict = Verdict::refused;
                r.reason = "no section ε given";
                return;
            }
            const MixedReport& m = mixed_for(name);
            if (!m.mixed()) {
                r.verdict = Verdict::refused;
                r.reason = "no mixed submanifold: " + mixed_reason(m);
                return;
            }
            const ComplexBivector pi(pf.bivector(name));
            Section eps{pf.vector(pf.section->x), pf.form(pf.section->xi1), pf.form(pf.section->xi2)};
            SplittingReport s = splitting_check(pi, bundle, eps, full_points);
            if (!s.section_in_graph) {
                r.verdict = Verdict::refused;
                r.reason = "ε is not in the graph of π";
                r.witnesses["graph_residual"] = poly_text(s.graph_residual);
                return;
            }
            r.verdict = s.passed() ? Verdict::pass : Verdict::fail;
            r.witnesses["B"] = poly_text(s.b);
            r.witnesses["omega"] = poly_text(s.omega);
            r.witnesses["B_plus_i_omega"] = poly_text(s.b + GaussScalar::i() * s.omega);
            r.witnesses["vanishes_on_n"] = s.vanishes_on_n;
            r.witnesses["euler_linear"] = s.euler_linear;
            r.witnesses["warnings"] = s.warnings;
            r.witnesses["fiber_block_is_minus_omega_tilde"] = s.fiber_equals_minus_omega_tilde;
            ojson bad = ojson::array();
            for (const auto& sp : s.points)
                if (!sp.graph_ok) bad.push_back(to_json(sp.point));
            r.witnesses["graph_identity_points"] = s.points.size();
            r.witnesses["graph_identity_failures"] = bad;
        }));
    }
    return rep;
}

Report run_command(const std::string& command, const ProblemFile& pf, const RunOptions& opts) {
    if (command == "check") return cmd_check(pf, opts);
    if (command == "invariants") return cmd_invariants(pf, opts);
    if (command == "dirac") return cmd_dirac(pf, opts);
    if (command == "normal-form") return cmd_normal_form(pf, opts);
    throw std::invalid_argument("unknown command '" + command + "'");
}

}  // namespace cxp
