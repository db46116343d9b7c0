#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cxpoisson/commands.hpp"
#include "cxpoisson/problem.hpp"
#include "cxpoisson/report.hpp"
#include "generators.hpp"

using namespace cxp;
using testgen::Gen;

namespace {

std::string problems_dir() {
    if (const char* d = std::getenv("CXPOISSON_PROBLEMS")) return d;
    return CXP_PROBLEMS_DIR;
}

ProblemFile example(const std::string& name) { return load_problem(problems_dir() + "/" + name); }

RunOptions opts_with(std::vector<std::string> checks = {}, int grid = 20) {
    RunOptions o;
    o.checks = std::move(checks);
    o.grid_size = grid;
    return o;
}

const Record& only(const Report& r, const std::string& check) {
    const Record* found = nullptr;
    for (const auto& rec : r.records)
        if (rec.check == check) {
            REQUIRE_MESSAGE(found == nullptr, "check appears twice: " << check);
            found = &rec;
        }
    REQUIRE_MESSAGE(found != nullptr, "missing check " << check);
    return *found;
}

ProblemError parse_error_of(const std::string& text) {
    try {
        parse_problem(text);
    } catch (const ProblemError& e) {
        return e;
    }
    FAIL("expected a ProblemError");
    return ProblemError("", "", 0, 0);
}

/// Random problem file exercising every section of the format.
ProblemFile random_problem(Gen& g) {
    ProblemFile pf;
    const int n = g.integer(2, 4);
    pf.chart = testgen::chart_n(n);
    if (g.coin()) {
        int f = g.integer(1, n);
        for (int k = n - f; k < n; ++k) pf.zero.push_back(pf.chart.var(k));
    }
    int nb = g.integer(0, 2);
    for (int k = 0; k < nb; ++k) pf.bivectors.emplace_back("b" + std::to_string(k), g.multi(pf.chart, 2, 2));
    pf.forms.emplace_back("w", g.form(pf.chart, 2, 1));
    pf.forms.emplace_back("a", g.form(pf.chart, 1, 2));
    pf.forms.emplace_back("f0", g.form(pf.chart, 0, 2));
    pf.forms.emplace_back("empty", FormField(pf.chart, g.integer(0, n)));
    pf.vectors.emplace_back("X", g.multi(pf.chart, 1, 2));
    int np = g.integer(0, 3);
    for (int k = 0; k < np; ++k) pf.points.push_back(g.point(n));
    if (!pf.zero.empty()) {
        if (!pf.bivectors.empty() && g.coin()) pf.section = SectionSpec{g.coin() ? "b0" : "", "X", "a", "a"};
        if (g.coin()) pf.moser = {"w", "a"};
    }
    Pipeline pl;
    pl.name = "p";
    if (g.coin()) pl.points.push_back(g.point(n));
    if (!pf.bivectors.empty() && g.coin())
        pl.steps.push_back({"graph", {{"bivector", "b0"}}});
    else
        pl.steps.push_back({"graph", {{"form", "w"}}});
    pl.steps.push_back({"store", {{"as", "r"}}});
    const char* plain[] = {"tilde", "hat", "check", "conjugate", "indices", "hat_cot"};
    for (int k = g.integer(0, 3); k > 0; --k) pl.steps.push_back({plain[g.integer(0, 5)], {}});
    pl.steps.push_back({"scalar_dot", {{"z", "1 + 2*i"}}});
    pl.steps.push_back({"product", {{"kind", "tangent"}, {"with", "r"}}});
    pl.steps.push_back({"compare", {{"with", "r"}}});
    pf.pipelines.push_back(pl);
    for (const auto& id : known_check_ids())
        if (g.coin(0.2)) pf.checks.push_back(id);
    return pf;
}

struct Run {
    int status = -1;
    std::string out;
};

Run run_binary(const std::string& args) {
    const char* bin = std::getenv("CXPOISSON_BIN");
    Run r;
    if (!bin) return r;
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int st = pclose(pipe);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

}  // namespace

TEST_CASE("problem file: basic parse") {
    ProblemFile pf = example("nb.json");
    CHECK(pf.chart.vars() == std::vector<std::string>{"x", "y", "z"});
    REQUIRE(pf.bivectors.size() == 1);
    CHECK(pf.bivectors[0].first == "nb");
    const MultiField& nb = pf.bivector("nb");
    CHECK(nb.coeff({0, 1}) == Poly(pf.chart, 1));
    CHECK(nb.coeff({0, 2}) == Poly(pf.chart, GaussScalar::i()));
    CHECK(nb.coeff({1, 2}) == Poly::parse(pf.chart, "y + i*z"));
    REQUIRE(pf.points.size() == 2);
    CHECK(pf.points[1] == Point{1, -2, Rational(1, 3)});
}

TEST_CASE("problem file: named indices, components and point objects") {
    ProblemFile pf = parse_problem(R"({
      "chart": ["q", "p"],
      "submanifold": {"zero": ["p"]},
      "bivectors": {"s": [{"i": "q", "j": "p", "coeff": 2}, {"i": 1, "j": 2, "coeff": "i"}]},
      "forms": {"a": {"components": ["p", 0]}},
      "vectors": {"X": {"components": ["0", "p"]}},
      "points": [{"q": "1/2", "p": -1}],
      "section": {"X": "X", "xi1": "a", "xi2": "a"}
    })");
    CHECK(pf.bivector("s").coeff({0, 1}) == Poly::parse(pf.chart, "2 + i"));
    CHECK(pf.form("a").degree() == 1);
    CHECK(pf.form("a").coeff(0) == Poly::variable(pf.chart, "p"));
    CHECK(pf.points[0] == Point{Rational(1, 2), -1});
    REQUIRE(pf.section.has_value());
    CHECK(pf.section->bivector.empty());
}

TEST_CASE("problem file: round trip on the example corpus") {
    for (const auto& entry : std::filesystem::directory_iterator(problems_dir())) {
        if (entry.path().extension() != ".json") continue;
        CAPTURE(entry.path().string());
        ProblemFile pf = load_problem(entry.path().string());
        std::string text = print_problem(pf);
        ProblemFile again = parse_problem(text);
        CHECK(again == pf);
        CHECK(print_problem(again) == text);
    }
}

TEST_CASE("problem file: round trip on random files") {
    Gen g(7001);
    for (int t = 0; t < 100; ++t) {
        ProblemFile pf = random_problem(g);
        std::string text = print_problem(pf);
        CAPTURE(text);
        ProblemFile again = parse_problem(text);
        REQUIRE(again == pf);
        CHECK(print_problem(again) == text);
    }
}

TEST_CASE("problem file: errors carry line and column") {
    SUBCASE("syntax error") {
        auto e = parse_error_of("{\"chart\": [\"x\"],\n \"points\": [[1],]\n}");
        CHECK(e.line == 2);
        CHECK(e.column == 17);
    }
    SUBCASE("term order") {
        auto e = parse_error_of("{\"chart\": [\"x\", \"y\"],\n \"bivectors\": {\"a\": [\n   {\"i\": 2, \"j\": 1, \"coeff\": \"1\"}]}}");
        CHECK(e.line == 3);
        CHECK(e.column == 4);
        CHECK(e.pointer == "/bivectors/a/0");
        CHECK(std::string(e.what()).find("i < j") != std::string::npos);
    }
    SUBCASE("bad coefficient points at the string") {
        auto e = parse_error_of("{\"chart\": [\"x\", \"y\"],\n \"bivectors\": {\"a\": [{\"i\": 1, \"j\": 2, \"coeff\": \"x +* y\"}]}}");
        CHECK(e.line == 2);
        CHECK(e.column == 48);
        CHECK(e.pointer == "/bivectors/a/0/coeff");
    }
    SUBCASE("unknown variable") {
        auto e = parse_error_of(R"({"chart": ["x", "y"], "bivectors": {"a": [{"i": 1, "j": 2, "coeff": "w"}]}})");
        CHECK(std::string(e.what()).find("w") != std::string::npos);
    }
    SUBCASE("index out of range") {
        auto e = parse_error_of(R"({"chart": ["x", "y"], "bivectors": {"a": [{"i": 1, "j": 3, "coeff": "1"}]}})");
        CHECK(e.pointer == "/bivectors/a/0/j");
    }
    SUBCASE("unknown field") {
        auto e = parse_error_of(R"({"chart": ["x"], "bivector": {}})");
        CHECK(e.pointer == "/bivector");
    }
    SUBCASE("unknown check") {
        auto e = parse_error_of(R"({"chart": ["x"], "checks": ["jacobi", "nope"]})");
        CHECK(e.pointer == "/checks/1");
    }
    SUBCASE("submanifold must be trailing") {
        auto e = parse_error_of(R"({"chart": ["x", "y"], "submanifold": {"zero": ["x"]}})");
        CHECK(e.pointer == "/submanifold/zero/0");
    }
    SUBCASE("section needs a submanifold") {
        auto e = parse_error_of(R"({"chart": ["x"], "bivectors": {"a": []}, "vectors": {"X": {"components": ["x"]}},
            "forms": {"f": {"components": ["0"]}}, "section": {"X": "X", "xi1": "f", "xi2": "f"}})");
        CHECK(e.pointer == "/section");
    }
    SUBCASE("pipeline references") {
        auto e = parse_error_of(R"({"chart": ["x", "y"], "pipelines": [{"name": "p", "steps": [
            {"op": "graph", "bivector": "missing"}]}]})");
        CHECK(e.pointer == "/pipelines/0/steps/0/bivector");
        auto e2 = parse_error_of(R"({"chart": ["x", "y"], "bivectors": {"a": []}, "pipelines": [{"name": "p", "steps": [
            {"op": "graph", "bivector": "a"}, {"op": "product", "kind": "tangent", "with": "r"}]}]})");
        CHECK(e2.pointer == "/pipelines/0/steps/1/with");
        auto e3 = parse_error_of(R"({"chart": ["x", "y"], "bivectors": {"a": []}, "pipelines": [{"name": "p", "steps": [
            {"op": "graph", "bivector": "a"}, {"op": "twist"}]}]})");
        CHECK(e3.pointer == "/pipelines/0/steps/1/op");
        auto e4 = parse_error_of(R"({"chart": ["x", "y"], "forms": {"w": {"components": ["1", "0"]}}, "pipelines": [{"name": "p", "steps": [
            {"op": "graph", "form": "w"}]}]})");
        CHECK(e4.pointer == "/pipelines/0/steps/0/form");
        auto e5 = parse_error_of(R"({"chart": ["x", "y"], "forms": {"w": {"degree": 2, "terms": []}}, "pipelines": [{"name": "p", "steps": [
            {"op": "graph", "form": "w"}, {"op": "compare", "with": "tilde_foliation"}]}]})");
        CHECK(e5.pointer == "/pipelines/0/steps/1");
    }
}

TEST_CASE("point lists") {
    auto pts = parse_point_list("1,2,3; 1/2, 0, -1", 3);
    REQUIRE(pts.size() == 2);
    CHECK(pts[1] == Point{Rational(1, 2), 0, -1});
    CHECK_THROWS_AS(parse_point_list("1,2", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_point_list("1,a,2", 3), std::invalid_argument);
}

TEST_CASE("requested checks") {
    ProblemFile pf = example("nb.json");
    CHECK(requested_checks("check", pf, {}) == std::vector<std::string>{"jacobi", "pair_conditions", "pde"});
    CHECK(requested_checks("check", pf, opts_with({"pde", "jacobi", "pde"})) ==
          std::vector<std::string>{"jacobi", "pde"});
    CHECK_THROWS_AS(requested_checks("check", pf, opts_with({"gcs"})), std::invalid_argument);
    pf.checks = {"involutivity", "jacobi"};
    CHECK(requested_checks("invariants", pf, {}) == std::vector<std::string>{"involutivity"});
    CHECK(requested_checks("check", pf, {}) == std::vector<std::string>{"jacobi"});
}

TEST_CASE("check command") {
    Report nb = cmd_check(example("nb.json"), {});
    CHECK(nb.records.size() == 3);
    for (const auto& r : nb.records) CHECK(r.verdict == Verdict::pass);
    CHECK(nb.exit_code() == 0);

    Report zero = cmd_check(example("zero.json"), {});
    for (const auto& r : zero.records) CHECK(r.verdict == Verdict::pass);

    // Independent oracle: for {x,y}=1, {x,z}=i, {y,z}=f the Jacobiator is f_y + i f_z,
    // and the ∂x∧∂y∧∂z component of [π,π] is twice that.
    ProblemFile broken = example("nb_broken.json");
    Report rep = cmd_check(broken, {});
    CHECK(rep.exit_code() == 1);
    const Chart& c = broken.chart;
    Poly f = broken.bivector("nb_broken").coeff({1, 2});
    Poly jacobiator = f.partial("y") + f.partial("z") * GaussScalar::i();
    CHECK(jacobiator == Poly::parse(c, "2*y - 1"));
    MultiField expected(c, 3);
    expected.add({0, 1, 2}, jacobiator * GaussScalar(2));
    const Record& jac = only(rep, "jacobi");
    CHECK(jac.verdict == Verdict::fail);
    CHECK(jac.witnesses["residual"] == expected.str());
    const Record& pde = only(rep, "pde");
    REQUIRE(pde.witnesses["nonzero"].size() == 1);
    CHECK(pde.witnesses["nonzero"][0]["value"] == jacobiator.str());
}

TEST_CASE("invariants command") {
    SUBCASE("NB profile") {
        Report rep = cmd_invariants(example("nb.json"), {});
        const Record& rp = only(rep, "rank_profile");
        CHECK(rp.witnesses["profiles"].size() == 22);
        for (const auto& row : rp.witnesses["profiles"]) {
            CHECK(row["dim_E"] == 2);
            CHECK(row["dim_Delta"] == 1);
            CHECK(row["real_index"] == 1);
        }
        CHECK(rp.witnesses["strongly_regular_sample"] == true);
        CHECK(rp.witnesses["quasi_real_sample"] == false);
        for (const char* id : {"real_index", "a_pi", "presymplectic", "hat_sign", "tilde_foliation"})
            CHECK(only(rep, id).verdict == Verdict::pass);
        // Not generalized complex: gcs is skipped unless asked for.
        for (const auto& r : rep.records) CHECK(r.check != "gcs");
        CHECK(rep.exit_code() == 0);

        Report asked = cmd_invariants(example("nb.json"), opts_with({"gcs"}, 2));
        CHECK(only(asked, "gcs").verdict == Verdict::refused);
        CHECK(asked.exit_code() == 2);
    }
    SUBCASE("diagonal complexification is quasi-real") {
        Report rep = cmd_invariants(example("diagonal.json"), opts_with({"rank_profile"}));
        const Record& rp = only(rep, "rank_profile");
        CHECK(rp.witnesses["quasi_real_sample"] == true);
        for (const auto& row : rp.witnesses["profiles"]) CHECK(row["quasi_real"] == true);
    }
    SUBCASE("i sigma is generalized complex") {
        Report rep = cmd_invariants(example("i_sigma.json"), {});
        for (const auto& row : only(rep, "rank_profile").witnesses["profiles"]) CHECK(row["real_index"] == 0);
        const Record& g = only(rep, "gcs");
        CHECK(g.verdict == Verdict::pass);
        // J = [[0, σ], [−σ⁻¹, 0]] for the symplectic matrix σ = [[0,1],[−1,0]].
        ojson j = ojson::array({ojson::array({"0", "0", "0", "1"}), ojson::array({"0", "0", "-1", "0"}),
                                ojson::array({"0", "1", "0", "0"}), ojson::array({"-1", "0", "0", "0"})});
        CHECK(g.witnesses["gcs_matrix_at_first_point"] == j);
    }
    SUBCASE("NB images are not involutive") {
        Report rep = cmd_invariants(example("nb.json"), opts_with({"involutivity"}, 3));
        const Record& inv = only(rep, "involutivity");
        CHECK(inv.verdict == Verdict::fail);
        CHECK(inv.witnesses["im_pi1"]["involutive"] == false);
        CHECK(inv.witnesses["im_pi2"]["involutive"] == false);
        CHECK(inv.witnesses["im_pi1"]["first_failure"]["bracket"] == "∂z");
    }
}

TEST_CASE("dirac command") {
    SUBCASE("check of a complex two-form graph is the graph of its real part") {
        Report rep = cmd_dirac(example("two_form_check.json"), {});
        const Record& r = only(rep, "dirac");
        CHECK(r.verdict == Verdict::pass);
        CHECK(r.witnesses["points"].size() == 2);
    }
    SUBCASE("tilde of NB matches the presymplectic description") {
        Report rep = cmd_dirac(example("nb_tilde.json"), {});
        CHECK(only(rep, "dirac").verdict == Verdict::pass);
    }
    SUBCASE("zero bivector has real index n") {
        Report rep = cmd_dirac(example("zero.json"), {});
        const Record& r = only(rep, "dirac");
        for (const auto& pt : r.witnesses["points"]) CHECK(pt["steps"][1]["real_index"] == 2);
    }
    SUBCASE("failed comparison and refusals") {
        ProblemFile pf = parse_problem(R"({"chart": ["q", "p"],
          "bivectors": {"s": [{"i": 1, "j": 2, "coeff": "1"}], "t": [{"i": 1, "j": 2, "coeff": "2"}],
                        "half": [{"i": 1, "j": 2, "coeff": "1/2"}]},
          "pipelines": [
            {"name": "differ", "points": [[0, 0]], "steps": [{"op": "graph", "bivector": "s"}, {"op": "compare", "bivector": "t"}]},
            {"name": "no_points", "steps": [{"op": "graph", "bivector": "s"}]},
            {"name": "laws", "points": [[1, 1]], "steps": [
              {"op": "graph", "bivector": "s"}, {"op": "store", "as": "l"},
              {"op": "scalar_dot", "z": "2"}, {"op": "compare", "bivector": "half"},
              {"op": "load", "from": "l"}, {"op": "conjugate"}, {"op": "compare", "with": "l"}]}
          ]})");
        Report rep = cmd_dirac(pf, {});
        REQUIRE(rep.records.size() == 3);
        CHECK(rep.records[0].verdict == Verdict::fail);
        CHECK(rep.records[1].verdict == Verdict::refused);
        CHECK(rep.records[2].verdict == Verdict::pass);
    }
}

TEST_CASE("normal-form command") {
    SUBCASE("R4 split with a section in the graph") {
        Report rep = cmd_normal_form(example("r4_split.json"), opts_with({}, 5));
        CHECK(only(rep, "mixed").verdict == Verdict::pass);
        const Record& s = only(rep, "splitting");
        CHECK(s.verdict == Verdict::pass);
        // ε = (q∂q + p∂p) + (p dq − q dp): dξ₁ = 2 dp∧dq, averaged over fiber weight 2.
        CHECK(s.witnesses["B"] == "(-1) dq∧dp");
        CHECK(s.witnesses["omega"] == "0");
        CHECK(s.witnesses["graph_identity_failures"].empty());
        CHECK(rep.exit_code() == 0);
    }
    SUBCASE("section outside the graph is refused") {
        Report rep = cmd_normal_form(example("r4_split_literal.json"), opts_with({}, 5));
        const Record& s = only(rep, "splitting");
        CHECK(s.verdict == Verdict::refused);
        CHECK(s.witnesses["graph_residual"] == "(-2*q) ∂q + (-2*p) ∂p");
    }
    SUBCASE("diagonal complexification has no mixed submanifold here") {
        Report rep = cmd_normal_form(example("diagonal_normal_form.json"), opts_with({}, 5));
        CHECK(only(rep, "mixed").verdict == Verdict::fail);
        const Record& s = only(rep, "splitting");
        CHECK(s.verdict == Verdict::refused);
        CHECK(s.reason.find("no mixed submanifold") == 0);
        CHECK(rep.exit_code() == 2);
    }
    SUBCASE("weight zero is refused with the monomial") {
        Report rep = cmd_normal_form(example("weight_zero.json"), opts_with({}, 5));
        std::vector<const Record*> moser;
        for (const auto& r : rep.records)
            if (r.check == "moser") moser.push_back(&r);
        REQUIRE(moser.size() == 2);
        CHECK(moser[0]->verdict == Verdict::pass);
        CHECK(moser[0]->witnesses["average"] == "(1/2*p) du∧dq + (1/2) dq∧dp");
        CHECK(moser[1]->verdict == Verdict::refused);
        CHECK(moser[1]->witnesses["monomial"] == "du");
        CHECK(moser[1]->reason.find("weight") == 0);
    }
    SUBCASE("no submanifold") {
        Report rep = cmd_normal_form(example("nb.json"), {});
        CHECK(rep.exit_code() == 2);
    }
}

TEST_CASE("report rendering") {
    Report rep = cmd_check(example("nb_broken.json"), opts_with({"jacobi"}));
    std::string machine = render_machine(rep);
    std::istringstream lines(machine);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        ojson j = ojson::parse(line);
        std::vector<std::string> keys;
        for (const auto& [k, v] : j.items()) keys.push_back(k);
        CHECK(keys == std::vector<std::string>{"check", "subject", "inputs", "verdict", "witnesses"});
        ++count;
    }
    CHECK(count == 1);
    std::string human = render_human(rep);
    CHECK(human.find("[FAIL] jacobi nb_broken") == 0);
    CHECK(human.find("residual: (4*y - 2) ∂x∧∂y∧∂z") != std::string::npos);

    Record refused;
    refused.check = "x";
    refused.verdict = Verdict::refused;
    refused.reason = "because";
    refused.timing_ms = 1.5;
    ojson j = refused.to_json();
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"check", "subject", "inputs", "verdict", "reason", "witnesses", "timing_ms"});
}

TEST_CASE("reports are deterministic") {
    for (const char* f : {"nb.json", "nb_tilde.json", "r4_split.json"}) {
        ProblemFile pf = example(f);
        for (const char* cmd : {"check", "invariants", "dirac"}) {
            RunOptions o = opts_with({}, 4);
            CHECK(render_machine(run_command(cmd, pf, o)) == render_machine(run_command(cmd, pf, o)));
        }
    }
}

TEST_CASE("binary: exit codes and formats") {
    if (!std::getenv("CXPOISSON_BIN")) {
        MESSAGE("CXPOISSON_BIN not set; skipping binary checks");
        return;
    }
    const std::string d = problems_dir() + "/";
    CHECK(run_binary("check " + d + "nb.json").status == 0);
    CHECK(run_binary("check " + d + "nb_broken.json").status == 1);
    CHECK(run_binary("check " + d + "zero.json").status == 0);
    CHECK(run_binary("invariants " + d + "nb.json --grid-size 3").status == 0);
    CHECK(run_binary("invariants " + d + "nb.json --grid-size 3 --check involutivity").status == 1);
    CHECK(run_binary("dirac " + d + "nb_tilde.json").status == 0);
    CHECK(run_binary("normal-form " + d + "r4_split.json --grid-size 4").status == 0);
    CHECK(run_binary("normal-form " + d + "diagonal_normal_form.json --grid-size 4").status == 2);
    CHECK(run_binary("normal-form " + d + "weight_zero.json --grid-size 4").status == 2);
    CHECK(run_binary("check " + d + "nb.json --check gcs").status == 2);
    CHECK(run_binary("check " + d + "does_not_exist.json").status == 2);
    CHECK(run_binary("check " + d + "nb.json --points 1,2").status == 2);

    Run m = run_binary("check " + d + "nb.json --format machine --points \"1,2,3\"");
    CHECK(m.status == 0);
    std::istringstream lines(m.out);
    std::string line;
    std::set<std::string> seen;
    while (std::getline(lines, line)) seen.insert(ojson::parse(line)["check"].get<std::string>());
    CHECK(seen == std::set<std::string>{"jacobi", "pair_conditions", "pde"});

    Run t = run_binary("check " + d + "nb.json --format machine --timing");
    CHECK(t.out.find("\"timing_ms\"") != std::string::npos);

    Run p = run_binary("print " + d + "nb_tilde.json");
    CHECK(p.status == 0);
    CHECK(parse_problem(p.out) == example("nb_tilde.json"));
}
