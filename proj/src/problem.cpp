#include "cxpoisson/problem.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace cxp {

ProblemError::ProblemError(const std::string& msg, std::string ptr, std::size_t l, std::size_t c)
    : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) +
                         (ptr.empty() ? "" : " (" + ptr + ")") + ": " + msg),
      pointer(std::move(ptr)), line(l), column(c) {}

const std::string* PipelineStep::arg(const std::string& key) const {
    for (const auto& [k, v] : args)
        if (k == key) return &v;
    return nullptr;
}

namespace {

template <typename T>
const T& find_named(const Named<T>& items, const std::string& name, const char* what) {
    for (const auto& [n, v] : items)
        if (n == name) return v;
    throw std::out_of_range(std::string("no ") + what + " named '" + name + "'");
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& check_table() {
    static const std::vector<std::pair<std::string, std::vector<std::string>>> table = {
        {"check", {"jacobi", "pair_conditions", "pde"}},
        {"invariants",
         {"rank_profile", "real_index", "a_pi", "presymplectic", "hat_sign", "tilde_foliation", "gcs", "involutivity"}},
        {"dirac", {"dirac"}},
        {"normal-form", {"mixed", "moser", "splitting"}},
    };
    return table;
}

}  // namespace

const MultiField& ProblemFile::bivector(const std::string& name) const { return find_named(bivectors, name, "bivector"); }
const FormField& ProblemFile::form(const std::string& name) const { return find_named(forms, name, "form"); }
const MultiField& ProblemFile::vector(const std::string& name) const { return find_named(vectors, name, "vector"); }

const std::vector<std::string>& check_ids_for(const std::string& command) {
    for (const auto& [c, ids] : check_table())
        if (c == command) return ids;
    throw std::invalid_argument("unknown command '" + command + "'");
}

const std::vector<std::string>& known_check_ids() {
    static const std::vector<std::string> all = [] {
        std::vector<std::string> r;
        for (const auto& [c, ids] : check_table()) r.insert(r.end(), ids.begin(), ids.end());
        return r;
    }();
    return all;
}

namespace {

using json = nlohmann::ordered_json;

// Character iterator that publishes the offset of the last character the lexer read.
class TrackingIterator {
public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = char;
    using difference_type = std::ptrdiff_t;
    using pointer = const char*;
    using reference = const char&;

    TrackingIterator() = default;
    TrackingIterator(const char* p, const char* base, std::size_t* pos) : p_(p), base_(base), pos_(pos) {}

    reference operator*() const {
        *pos_ = static_cast<std::size_t>(p_ - base_);
        return *p_;
    }
    TrackingIterator& operator++() {
        ++p_;
        return *this;
    }
    TrackingIterator operator++(int) {
        auto t = *this;
        ++p_;
        return t;
    }
    bool operator==(const TrackingIterator& o) const { return p_ == o.p_; }
    bool operator!=(const TrackingIterator& o) const { return p_ != o.p_; }

private:
    const char* p_ = nullptr;
    const char* base_ = nullptr;
    std::size_t* pos_ = nullptr;
};

std::string escape_token(const std::string& key) {
    std::string r;
    for (char c : key) {
        if (c == '~') r += "~0";
        else if (c == '/') r += "~1";
        else r += c;
    }
    return r;
}

// Builds the document through the stock DOM handler and records where each value ends.
class PositionSax {
public:
    PositionSax(json& root, const std::size_t* pos, std::map<std::string, std::size_t>& offsets)
        : dom_(root), pos_(pos), offsets_(offsets) {}

    bool null() { return scalar([&] { return dom_.null(); }); }
    bool boolean(bool v) { return scalar([&] { return dom_.boolean(v); }); }
    bool number_integer(json::number_integer_t v) { return scalar([&] { return dom_.number_integer(v); }); }
    bool number_unsigned(json::number_unsigned_t v) { return scalar([&] { return dom_.number_unsigned(v); }); }
    bool number_float(json::number_float_t v, const json::string_t& s) {
        return scalar([&] { return dom_.number_float(v, s); });
    }
    bool string(json::string_t& v) { return scalar([&] { return dom_.string(v); }); }
    bool binary(json::binary_t& v) { return scalar([&] { return dom_.binary(v); }); }

    bool start_object(std::size_t n) {
        mark();
        frames_.push_back({false, 0, {}});
        return dom_.start_object(n);
    }
    bool key(json::string_t& k) {
        frames_.back().key = k;
        return dom_.key(k);
    }
    bool end_object() {
        frames_.pop_back();
        advance();
        return dom_.end_object();
    }
    bool start_array(std::size_t n) {
        mark();
        frames_.push_back({true, 0, {}});
        return dom_.start_array(n);
    }
    bool end_array() {
        frames_.pop_back();
        advance();
        return dom_.end_array();
    }
    // Templated so the DOM handler rethrows the concrete exception type.
    template <typename Exception>
    bool parse_error(std::size_t p, const std::string& tok, const Exception& e) {
        return dom_.parse_error(p, tok, e);
    }

private:
    struct Frame {
        bool array;
        std::size_t index;
        std::string key;
    };

    template <typename F>
    bool scalar(F&& f) {
        mark();
        bool r = f();
        advance();
        return r;
    }
    std::string pointer() const {
        std::string r;
        for (const auto& f : frames_) r += "/" + (f.array ? std::to_string(f.index) : escape_token(f.key));
        return r;
    }
    void mark() { offsets_.emplace(pointer(), *pos_); }
    void advance() {
        if (!frames_.empty() && frames_.back().array) ++frames_.back().index;
    }

    nlohmann::detail::json_sax_dom_parser<json> dom_;
    const std::size_t* pos_;
    std::map<std::string, std::size_t>& offsets_;
    std::vector<Frame> frames_;
};

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t offset) {
    offset = std::min(offset, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < offset; ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

class Reader {
public:
    Reader(const std::string& text, std::map<std::string, std::size_t> offsets)
        : text_(text), offsets_(std::move(offsets)) {}

    [[noreturn]] void fail(const std::string& ptr, const std::string& msg) const {
        std::size_t off = 0;
        // Nearest recorded ancestor.
        std::string p = ptr;
        for (;;) {
            auto it = offsets_.find(p);
            if (it != offsets_.end()) {
                off = it->second;
                break;
            }
            auto slash = p.rfind('/');
            if (slash == std::string::npos) break;
            p.erase(slash);
        }
        // A string value is recorded at its closing quote; point at the opening one.
        if (off < text_.size() && text_[off] == '"' && off > 0) {
            std::size_t k = off - 1;
            while (k > 0 && !(text_[k] == '"' && text_[k - 1] != '\\')) --k;
            off = k;
        }
        auto [l, c] = line_col(text_, off);
        throw ProblemError(msg, ptr, l, c);
    }

    const json& member(const json& obj, const std::string& ptr, const std::string& key) const {
        if (!obj.contains(key)) fail(ptr, "missing field '" + key + "'");
        return obj.at(key);
    }
    void expect_object(const json& j, const std::string& ptr) const {
        if (!j.is_object()) fail(ptr, "expected an object");
    }
    void expect_array(const json& j, const std::string& ptr) const {
        if (!j.is_array()) fail(ptr, "expected an array");
    }
    void only_keys(const json& obj, const std::string& ptr, std::initializer_list<const char*> keys) const {
        for (const auto& [k, v] : obj.items()) {
            bool ok = false;
            for (const char* a : keys) ok = ok || k == a;
            if (!ok) fail(ptr + "/" + escape_token(k), "unknown field '" + k + "'");
        }
    }
    std::string str(const json& j, const std::string& ptr) const {
        if (!j.is_string()) fail(ptr, "expected a string");
        return j.get<std::string>();
    }
    int integer(const json& j, const std::string& ptr) const {
        if (!j.is_number_integer()) fail(ptr, "expected an integer");
        return j.get<int>();
    }
    Rational rational(const json& j, const std::string& ptr) const {
        if (j.is_number_integer()) return Rational(j.get<long>());
        if (!j.is_string()) fail(ptr, "expected a rational number as string or integer");
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception& e) {
            fail(ptr, e.what());
        }
    }
    Poly coeff(const json& j, const std::string& ptr, const Chart& chart) const {
        if (j.is_number_integer()) return Poly(chart, GaussScalar(Rational(j.get<long>())));
        std::string s = str(j, ptr);
        try {
            return Poly::parse(chart, s);
        } catch (const ParseError& e) {
            fail(ptr, std::string("coefficient '") + s + "': " + e.what());
        } catch (const std::invalid_argument& e) {
            fail(ptr, std::string("coefficient '") + s + "': " + e.what());
        }
    }
    /// 1-based integer or variable name; returns the 0-based position.
    int var_index(const json& j, const std::string& ptr, const Chart& chart) const {
        if (j.is_number_integer()) {
            int k = j.get<int>();
            if (k < 1 || k > chart.dim())
                fail(ptr, "index " + std::to_string(k) + " outside 1.." + std::to_string(chart.dim()));
            return k - 1;
        }
        std::string name = str(j, ptr);
        if (!chart.contains(name)) fail(ptr, "unknown variable '" + name + "'");
        return chart.index(name);
    }
    std::vector<std::string> string_list(const json& j, const std::string& ptr) const {
        expect_array(j, ptr);
        std::vector<std::string> r;
        for (std::size_t k = 0; k < j.size(); ++k) r.push_back(str(j[k], ptr + "/" + std::to_string(k)));
        return r;
    }
    Point point(const json& j, const std::string& ptr, const Chart& chart) const {
        Point p(static_cast<std::size_t>(chart.dim()));
        if (j.is_object()) {
            for (const auto& [k, v] : j.items())
                if (!chart.contains(k)) fail(ptr + "/" + escape_token(k), "unknown variable '" + k + "'");
            for (int k = 0; k < chart.dim(); ++k) {
                if (!j.contains(chart.var(k))) fail(ptr, "point is missing '" + chart.var(k) + "'");
                p[static_cast<std::size_t>(k)] = rational(j.at(chart.var(k)), ptr + "/" + escape_token(chart.var(k)));
            }
            return p;
        }
        expect_array(j, ptr);
        if (static_cast<int>(j.size()) != chart.dim())
            fail(ptr, "point has " + std::to_string(j.size()) + " coordinates, chart has " + std::to_string(chart.dim()));
        for (std::size_t k = 0; k < j.size(); ++k) p[k] = rational(j[k], ptr + "/" + std::to_string(k));
        return p;
    }
    std::vector<Point> points(const json& j, const std::string& ptr, const Chart& chart) const {
        expect_array(j, ptr);
        std::vector<Point> r;
        for (std::size_t k = 0; k < j.size(); ++k) r.push_back(point(j[k], ptr + "/" + std::to_string(k), chart));
        return r;
    }

private:
    const std::string& text_;
    std::map<std::string, std::size_t> offsets_;
};

MultiField read_bivector(const Reader& rd, const json& j, const std::string& ptr, const Chart& chart) {
    rd.expect_array(j, ptr);
    MultiField m(chart, 2);
    for (std::size_t t = 0; t < j.size(); ++t) {
        std::string tp = ptr + "/" + std::to_string(t);
        const json& term = j[t];
        rd.expect_object(term, tp);
        rd.only_keys(term, tp, {"i", "j", "coeff"});
        int a = rd.var_index(rd.member(term, tp, "i"), tp + "/i", chart);
        int b = rd.var_index(rd.member(term, tp, "j"), tp + "/j", chart);
        if (a >= b) rd.fail(tp, "term indices need i < j");
        m.add({a, b}, rd.coeff(rd.member(term, tp, "coeff"), tp + "/coeff", chart));
    }
    return m;
}

template <FieldKind K>
Graded<K> read_graded(const Reader& rd, const json& j, const std::string& ptr, const Chart& chart) {
    rd.expect_object(j, ptr);
    rd.only_keys(j, ptr, {"degree", "terms", "components"});
    std::optional<int> degree;
    if (j.contains("degree")) {
        degree = rd.integer(j.at("degree"), ptr + "/degree");
        if (*degree < 0 || *degree > chart.dim()) rd.fail(ptr + "/degree", "degree out of range");
    }
    if (j.contains("components")) {
        if (j.contains("terms")) rd.fail(ptr, "give either 'terms' or 'components'");
        if (degree && *degree != 1) rd.fail(ptr + "/degree", "'components' describes degree 1");
        const json& c = j.at("components");
        rd.expect_array(c, ptr + "/components");
        if (static_cast<int>(c.size()) != chart.dim())
            rd.fail(ptr + "/components", "expected one component per chart variable");
        std::vector<Poly> coeffs;
        for (std::size_t k = 0; k < c.size(); ++k)
            coeffs.push_back(rd.coeff(c[k], ptr + "/components/" + std::to_string(k), chart));
        return Graded<K>::from_components(chart, coeffs);
    }
    if (!j.contains("terms")) rd.fail(ptr, "missing field 'terms'");
    const json& terms = j.at("terms");
    rd.expect_array(terms, ptr + "/terms");
    if (!degree) {
        if (terms.empty()) rd.fail(ptr, "an empty term list needs an explicit 'degree'");
        const json& first = terms[0];
        if (!first.is_object() || !first.contains("idx") || !first.at("idx").is_array())
            rd.fail(ptr + "/terms/0", "expected {\"idx\": [...], \"coeff\": ...}");
        degree = static_cast<int>(first.at("idx").size());
    }
    Graded<K> g(chart, *degree);
    for (std::size_t t = 0; t < terms.size(); ++t) {
        std::string tp = ptr + "/terms/" + std::to_string(t);
        const json& term = terms[t];
        rd.expect_object(term, tp);
        rd.only_keys(term, tp, {"idx", "coeff"});
        const json& idx = rd.member(term, tp, "idx");
        rd.expect_array(idx, tp + "/idx");
        if (static_cast<int>(idx.size()) != *degree) rd.fail(tp + "/idx", "index count differs from the degree");
        IndexTuple it;
        for (std::size_t k = 0; k < idx.size(); ++k) {
            int v = rd.var_index(idx[k], tp + "/idx/" + std::to_string(k), chart);
            if (!it.empty() && v <= it.back()) rd.fail(tp + "/idx", "indices must be strictly increasing");
            it.push_back(v);
        }
        g.add(it, rd.coeff(rd.member(term, tp, "coeff"), tp + "/coeff", chart));
    }
    return g;
}

struct OpSpec {
    const char* op;
    std::vector<const char*> args;
};

const std::vector<OpSpec>& op_specs() {
    static const std::vector<OpSpec> specs = {
        {"graph", {"bivector", "form"}},
        {"hat", {}},
        {"check", {}},
        {"tilde", {}},
        {"hat_cot", {}},
        {"check_cot", {}},
        {"tilde_cot", {}},
        {"conjugate", {}},
        {"real_part", {}},
        {"indices", {}},
        {"product", {"kind", "with"}},
        {"b_field", {"form"}},
        {"beta", {"bivector"}},
        {"scalar_dot", {"z"}},
        {"scalar_bullet", {"z"}},
        {"image", {"kind", "map"}},
        {"store", {"as"}},
        {"load", {"from"}},
        {"compare", {"with", "bivector", "form", "source"}},
    };
    return specs;
}

Pipeline read_pipeline(const Reader& rd, const json& j, const std::string& ptr, const ProblemFile& pf) {
    rd.expect_object(j, ptr);
    rd.only_keys(j, ptr, {"name", "points", "steps"});
    Pipeline pl;
    pl.name = rd.str(rd.member(j, ptr, "name"), ptr + "/name");
    if (j.contains("points")) pl.points = rd.points(j.at("points"), ptr + "/points", pf.chart);
    const json& steps = rd.member(j, ptr, "steps");
    rd.expect_array(steps, ptr + "/steps");
    std::set<std::string> registers;
    bool graphed_bivector = false;
    auto has = [&](const auto& named, const std::string& n) {
        return std::any_of(named.begin(), named.end(), [&](const auto& e) { return e.first == n; });
    };
    for (std::size_t s = 0; s < steps.size(); ++s) {
        std::string sp = ptr + "/steps/" + std::to_string(s);
        const json& st = steps[s];
        rd.expect_object(st, sp);
        PipelineStep step;
        step.op = rd.str(rd.member(st, sp, "op"), sp + "/op");
        auto spec = std::find_if(op_specs().begin(), op_specs().end(),
                                 [&](const OpSpec& o) { return step.op == o.op; });
        if (spec == op_specs().end()) rd.fail(sp + "/op", "unknown pipeline op '" + step.op + "'");
        for (const auto& [k, v] : st.items()) {
            if (k == "op") continue;
            if (std::find_if(spec->args.begin(), spec->args.end(), [&](const char* a) { return k == a; }) ==
                spec->args.end())
                rd.fail(sp + "/" + escape_token(k), "op '" + step.op + "' takes no argument '" + k + "'");
            step.args.emplace_back(k, rd.str(v, sp + "/" + escape_token(k)));
        }
        auto need = [&](const char* key) -> const std::string& {
            const std::string* v = step.arg(key);
            if (!v) rd.fail(sp, "op '" + step.op + "' needs '" + key + "'");
            return *v;
        };
        auto arg_ptr = [&](const char* key) { return sp + "/" + key; };
        auto check_bivector = [&](const char* key) {
            if (const std::string* v = step.arg(key); v && !has(pf.bivectors, *v))
                rd.fail(arg_ptr(key), "unknown bivector '" + *v + "'");
        };
        auto check_form = [&](const char* key, int degree) {
            if (const std::string* v = step.arg(key)) {
                if (!has(pf.forms, *v)) rd.fail(arg_ptr(key), "unknown form '" + *v + "'");
                if (pf.form(*v).degree() != degree)
                    rd.fail(arg_ptr(key), "form '" + *v + "' must have degree " + std::to_string(degree));
            }
        };
        auto check_register = [&](const char* key) {
            const std::string& v = need(key);
            if (!registers.count(v)) rd.fail(arg_ptr(key), "nothing stored under '" + v + "' yet");
        };
        const std::string& op = step.op;
        if (op == "graph") {
            if ((step.arg("bivector") != nullptr) == (step.arg("form") != nullptr))
                rd.fail(sp, "graph needs exactly one of 'bivector' or 'form'");
            check_bivector("bivector");
            check_form("form", 2);
            graphed_bivector = graphed_bivector || step.arg("bivector");
        } else if (op == "product") {
            const std::string& kind = need("kind");
            if (kind != "tangent" && kind != "cotangent" && kind != "complex_tangent" && kind != "complex_cotangent")
                rd.fail(arg_ptr("kind"), "unknown product kind '" + kind + "'");
            check_register("with");
        } else if (op == "b_field") {
            need("form");
            check_form("form", 2);
        } else if (op == "beta") {
            need("bivector");
            check_bivector("bivector");
        } else if (op == "scalar_dot" || op == "scalar_bullet") {
            const std::string& z = need("z");
            Poly c;
            try {
                c = Poly::parse(pf.chart, z);
            } catch (const std::exception& e) {
                rd.fail(arg_ptr("z"), std::string("scalar '") + z + "': " + e.what());
            }
            if (!c.is_constant()) rd.fail(arg_ptr("z"), "scalar must be constant");
            if (c.is_zero()) rd.fail(arg_ptr("z"), "scalar must be nonzero");
        } else if (op == "image") {
            const std::string& kind = need("kind");
            const std::string& map = need("map");
            if (kind != "backward" && kind != "forward") rd.fail(arg_ptr("kind"), "image kind is backward or forward");
            if (map != "inclusion" && map != "projection")
                rd.fail(arg_ptr("map"), "image map is inclusion or projection");
            if (pf.zero.empty()) rd.fail(sp, "image needs a submanifold");
        } else if (op == "store") {
            registers.insert(need("as"));
        } else if (op == "load") {
            check_register("from");
        } else if (op == "compare") {
            int targets = (step.arg("with") ? 1 : 0) + (step.arg("bivector") ? 1 : 0) + (step.arg("form") ? 1 : 0);
            if (targets != 1) rd.fail(sp, "compare needs exactly one of 'with', 'bivector' or 'form'");
            check_bivector("bivector");
            check_form("form", 2);
            const std::string* with = step.arg("with");
            const std::string* source = step.arg("source");
            if (with && *with == "tilde_foliation") {
                if (source) check_bivector("source");
                else if (!graphed_bivector) rd.fail(sp, "tilde_foliation needs 'source' or an earlier bivector graph");
            } else {
                if (source) rd.fail(arg_ptr("source"), "'source' only applies to tilde_foliation");
                if (with) check_register("with");
            }
        }
        if (s == 0 && op != "graph" && op != "load")
            rd.fail(sp, "a pipeline starts with graph");
        pl.steps.push_back(std::move(step));
    }
    if (pl.steps.empty()) rd.fail(ptr + "/steps", "empty pipeline");
    return pl;
}

ProblemFile read_problem(const Reader& rd, const json& root) {
    rd.expect_object(root, "");
    rd.only_keys(root, "", {"chart", "submanifold", "bivectors", "forms", "vectors", "points", "section", "moser",
                            "pipelines", "checks"});
    ProblemFile pf;
    std::vector<std::string> vars = rd.string_list(rd.member(root, "", "chart"), "/chart");
    try {
        pf.chart = Chart(vars);
    } catch (const std::invalid_argument& e) {
        rd.fail("/chart", e.what());
    }
    const Chart& chart = pf.chart;

    if (root.contains("submanifold")) {
        const json& sm = root.at("submanifold");
        rd.expect_object(sm, "/submanifold");
        rd.only_keys(sm, "/submanifold", {"zero"});
        pf.zero = rd.string_list(rd.member(sm, "/submanifold", "zero"), "/submanifold/zero");
        if (pf.zero.empty()) rd.fail("/submanifold/zero", "no zeroed variables");
        int b = chart.dim() - static_cast<int>(pf.zero.size());
        for (std::size_t k = 0; k < pf.zero.size(); ++k) {
            std::string zp = "/submanifold/zero/" + std::to_string(k);
            if (!chart.contains(pf.zero[k])) rd.fail(zp, "unknown variable '" + pf.zero[k] + "'");
            if (b < 0 || chart.index(pf.zero[k]) != b + static_cast<int>(k))
                rd.fail(zp, "zeroed variables must be the trailing chart coordinates, in chart order");
        }
    }

    auto read_map = [&](const char* key, auto&& reader, auto& out) {
        if (!root.contains(key)) return;
        std::string mp = std::string("/") + key;
        const json& m = root.at(key);
        rd.expect_object(m, mp);
        for (const auto& [name, v] : m.items()) out.emplace_back(name, reader(v, mp + "/" + escape_token(name)));
    };
    read_map("bivectors", [&](const json& v, const std::string& p) { return read_bivector(rd, v, p, chart); },
             pf.bivectors);
    read_map("forms",
             [&](const json& v, const std::string& p) { return read_graded<FieldKind::form>(rd, v, p, chart); },
             pf.forms);
    read_map("vectors",
             [&](const json& v, const std::string& p) { return read_graded<FieldKind::vector>(rd, v, p, chart); },
             pf.vectors);

    if (root.contains("points")) pf.points = rd.points(root.at("points"), "/points", chart);

    auto has = [](const auto& named, const std::string& n) {
        return std::any_of(named.begin(), named.end(), [&](const auto& e) { return e.first == n; });
    };

    if (root.contains("section")) {
        const json& s = root.at("section");
        rd.expect_object(s, "/section");
        rd.only_keys(s, "/section", {"bivector", "X", "xi1", "xi2"});
        if (pf.zero.empty()) rd.fail("/section", "a section needs a submanifold");
        SectionSpec sec;
        if (s.contains("bivector")) {
            sec.bivector = rd.str(s.at("bivector"), "/section/bivector");
            if (!has(pf.bivectors, sec.bivector)) rd.fail("/section/bivector", "unknown bivector '" + sec.bivector + "'");
        } else if (pf.bivectors.empty()) {
            rd.fail("/section", "a section needs a bivector");
        }
        sec.x = rd.str(rd.member(s, "/section", "X"), "/section/X");
        if (!has(pf.vectors, sec.x)) rd.fail("/section/X", "unknown vector '" + sec.x + "'");
        if (pf.vector(sec.x).degree() != 1) rd.fail("/section/X", "X must be a vector field");
        for (auto [key, dest] : {std::pair{"xi1", &sec.xi1}, std::pair{"xi2", &sec.xi2}}) {
            std::string p = std::string("/section/") + key;
            *dest = rd.str(rd.member(s, "/section", key), p);
            if (!has(pf.forms, *dest)) rd.fail(p, "unknown form '" + *dest + "'");
            if (pf.form(*dest).degree() != 1) rd.fail(p, std::string(key) + " must be a one-form");
        }
        pf.section = sec;
    }

    if (root.contains("moser")) {
        pf.moser = rd.string_list(root.at("moser"), "/moser");
        if (pf.zero.empty()) rd.fail("/moser", "moser averaging needs a submanifold");
        for (std::size_t k = 0; k < pf.moser.size(); ++k)
            if (!has(pf.forms, pf.moser[k]))
                rd.fail("/moser/" + std::to_string(k), "unknown form '" + pf.moser[k] + "'");
    }

    if (root.contains("pipelines")) {
        const json& pls = root.at("pipelines");
        rd.expect_array(pls, "/pipelines");
        std::set<std::string> names;
        for (std::size_t k = 0; k < pls.size(); ++k) {
            std::string pp = "/pipelines/" + std::to_string(k);
            pf.pipelines.push_back(read_pipeline(rd, pls[k], pp, pf));
            if (!names.insert(pf.pipelines.back().name).second)
                rd.fail(pp + "/name", "duplicate pipeline name '" + pf.pipelines.back().name + "'");
        }
    }

    if (root.contains("checks")) {
        pf.checks = rd.string_list(root.at("checks"), "/checks");
        const auto& known = known_check_ids();
        for (std::size_t k = 0; k < pf.checks.size(); ++k)
            if (std::find(known.begin(), known.end(), pf.checks[k]) == known.end())
                rd.fail("/checks/" + std::to_string(k), "unknown check '" + pf.checks[k] + "'");
    }
    return pf;
}

json point_json(const Point& p) {
    json a = json::array();
    for (const auto& q : p) a.push_back(rational_str(q));
    return a;
}

template <FieldKind K>
json graded_json(const Graded<K>& g) {
    json o;
    o["degree"] = g.degree();
    json terms = json::array();
    for (const auto& [idx, c] : g.comps()) {
        json ix = json::array();
        for (int k : idx) ix.push_back(k + 1);
        terms.push_back(json{{"idx", ix}, {"coeff", c.str()}});
    }
    o["terms"] = terms;
    return o;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
    std::size_t pos = 0;
    std::map<std::string, std::size_t> offsets;
    json root;
    PositionSax sax(root, &pos, offsets);
    try {
        TrackingIterator first(text.data(), text.data(), &pos), last(text.data() + text.size(), text.data(), &pos);
        json::sax_parse(first, last, &sax, nlohmann::detail::input_format_t::json, true, true);
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        if (auto colon = msg.find(": "); colon != std::string::npos) msg = msg.substr(colon + 2);
        auto [l, c] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ProblemError(msg, "", l, c);
    }
    Reader rd(text, std::move(offsets));
    return read_problem(rd, root);
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
}

std::string print_problem(const ProblemFile& p) {
    json root;
    root["chart"] = p.chart.vars();
    if (!p.zero.empty()) root["submanifold"] = json{{"zero", p.zero}};
    if (!p.bivectors.empty()) {
        json bs = json::object();
        for (const auto& [name, m] : p.bivectors) {
            json terms = json::array();
            for (const auto& [idx, c] : m.comps())
                terms.push_back(json{{"i", idx[0] + 1}, {"j", idx[1] + 1}, {"coeff", c.str()}});
            bs[name] = terms;
        }
        root["bivectors"] = bs;
    }
    if (!p.forms.empty()) {
        json fs = json::object();
        for (const auto& [name, f] : p.forms) fs[name] = graded_json(f);
        root["forms"] = fs;
    }
    if (!p.vectors.empty()) {
        json vs = json::object();
        for (const auto& [name, v] : p.vectors) vs[name] = graded_json(v);
        root["vectors"] = vs;
    }
    if (!p.points.empty()) {
        json pts = json::array();
        for (const auto& pt : p.points) pts.push_back(point_json(pt));
        root["points"] = pts;
    }
    if (p.section) {
        json s;
        if (!p.section->bivector.empty()) s["bivector"] = p.section->bivector;
        s["X"] = p.section->x;
        s["xi1"] = p.section->xi1;
        s["xi2"] = p.section->xi2;
        root["section"] = s;
    }
    if (!p.moser.empty()) root["moser"] = p.moser;
    if (!p.pipelines.empty()) {
        json pls = json::array();
        for (const auto& pl : p.pipelines) {
            json o;
            o["name"] = pl.name;
            if (!pl.points.empty()) {
                json pts = json::array();
                for (const auto& pt : pl.points) pts.push_back(point_json(pt));
                o["points"] = pts;
            }
            json steps = json::array();
            for (const auto& st : pl.steps) {
                json so;
                so["op"] = st.op;
                for (const auto& [k, v] : st.args) so[k] = v;
                steps.push_back(so);
            }
            o["steps"] = steps;
            pls.push_back(o);
        }
        root["pipelines"] = pls;
    }
    if (!p.checks.empty()) root["checks"] = p.checks;
    return root.dump(2) + "\n";
}

std::vector<Point> parse_point_list(const std::string& text, int dim) {
    std::vector<Point> out;
    std::stringstream pts(text);
    std::string item;
    while (std::getline(pts, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        Point p;
        std::stringstream cs(item);
        std::string c;
        while (std::getline(cs, c, ',')) {
            auto b = c.find_first_not_of(" \t"), e = c.find_last_not_of(" \t");
            if (b == std::string::npos) throw std::invalid_argument("empty coordinate in '" + item + "'");
            p.push_back(parse_rational(c.substr(b, e - b + 1)));
        }
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("point '" + item + "' has " + std::to_string(p.size()) +
                                        " coordinates, chart has " + std::to_string(dim));
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace cxp
