#include "cxpoisson/multivector.hpp"

#include <algorithm>
#include <stdexcept>

namespace cxp {

namespace {

void require_same_chart(const Chart& a, const Chart& b) {
    if (a != b) throw ChartMismatch("fields live on different charts");
}

/// Sorts idx in place; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(IndexTuple& idx) {
    int sign = 1;
    for (std::size_t a = 1; a < idx.size(); ++a)
        for (std::size_t b = a; b > 0 && idx[b - 1] >= idx[b]; --b) {
            if (idx[b - 1] == idx[b]) return 0;
            std::swap(idx[b - 1], idx[b]);
            sign = -sign;
        }
    return sign;
}

IndexTuple without(const IndexTuple& idx, std::size_t pos) {
    IndexTuple r;
    r.reserve(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
        if (k != pos) r.push_back(idx[k]);
    return r;
}

IndexTuple concat(IndexTuple a, const IndexTuple& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Poly unit(const Chart& c) { return Poly(c, GaussScalar(1)); }

}  // namespace

template <FieldKind K>
Graded<K>::Graded(Chart chart, int degree) : chart_(std::move(chart)), degree_(degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
}

template <FieldKind K>
Graded<K> Graded<K>::function(const Poly& f) {
    Graded g(f.chart(), 0);
    g.add({}, f);
    return g;
}

template <FieldKind K>
Graded<K> Graded<K>::from_components(const Chart& chart, const std::vector<Poly>& coeffs) {
    if (coeffs.size() != static_cast<std::size_t>(chart.dim()))
        throw std::invalid_argument("component count does not match chart");
    Graded g(chart, 1);
    for (int k = 0; k < chart.dim(); ++k) g.add({k}, coeffs[static_cast<std::size_t>(k)]);
    return g;
}

template <FieldKind K>
Graded<K> Graded<K>::coordinate(const Chart& chart, int k) {
    Graded g(chart, 1);
    g.add({k}, unit(chart));
    return g;
}

template <FieldKind K>
bool Graded<K>::is_real() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const auto& c) { return c.second.is_real(); });
}

template <FieldKind K>
void Graded<K>::add(IndexTuple idx, const Poly& coeff) {
    if (static_cast<int>(idx.size()) != degree_) throw std::invalid_argument("index tuple length differs from degree");
    for (int k : idx)
        if (k < 0 || k >= chart_.dim()) throw std::invalid_argument("index out of range");
    if (coeff.is_zero()) return;
    if (coeff.chart().dim() != 0) require_same_chart(chart_, coeff.chart());
    int sign = sort_with_sign(idx);
    if (sign == 0) return;
    auto it = comps_.find(idx);
    if (it == comps_.end()) {
        Poly c = coeff;
        if (sign < 0) c = -c;
        comps_.emplace(std::move(idx), std::move(c));
        return;
    }
    if (sign > 0)
        it->second += coeff;
    else
        it->second -= coeff;
    if (it->second.is_zero()) comps_.erase(it);
}

template <FieldKind K>
Poly Graded<K>::coeff(const IndexTuple& idx) const {
    auto it = comps_.find(idx);
    return it == comps_.end() ? Poly(chart_) : it->second;
}

template <FieldKind K>
Graded<K>& Graded<K>::operator+=(const Graded& o) {
    require_same_chart(chart_, o.chart_);
    if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch in sum");
    for (const auto& [idx, p] : o.comps_) add(idx, p);
    return *this;
}

template <FieldKind K>
Graded<K>& Graded<K>::operator-=(const Graded& o) {
    require_same_chart(chart_, o.chart_);
    if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch in difference");
    for (const auto& [idx, p] : o.comps_) add(idx, -p);
    return *this;
}

template <FieldKind K>
std::map<IndexTuple, GaussScalar> Graded<K>::eval(const Point& p) const {
    std::map<IndexTuple, GaussScalar> out;
    for (const auto& [idx, c] : comps_) {
        GaussScalar v = c.eval(p);
        if (!v.is_zero()) out.emplace(idx, v);
    }
    return out;
}

template <FieldKind K>
std::string Graded<K>::basis_label(const IndexTuple& idx, bool ascii) const {
    std::string s;
    const char* wedge_sym = ascii ? "^" : "∧";
    const char* prefix = K == FieldKind::form ? "d" : (ascii ? "D" : "∂");
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) s += wedge_sym;
        s += prefix + chart_.var(idx[k]);
    }
    return s;
}

template <FieldKind K>
std::string Graded<K>::str() const {
    if (comps_.empty()) return "0";
    std::string s;
    for (const auto& [idx, c] : comps_) {
        if (!s.empty()) s += " + ";
        if (idx.empty()) {
            s += c.str();
            continue;
        }
        if (c == unit(chart_))
            s += basis_label(idx);
        else
            s += "(" + c.str() + ") " + basis_label(idx);
    }
    return s;
}

template class Graded<FieldKind::vector>;
template class Graded<FieldKind::form>;

template <FieldKind K>
static std::pair<Graded<K>, Graded<K>> decompose_impl(const Graded<K>& m) {
    return {m.real_part(), m.imag_part()};
}

std::pair<MultiField, MultiField> decompose(const MultiField& m) { return decompose_impl(m); }
std::pair<FormField, FormField> decompose(const FormField& m) { return decompose_impl(m); }

template <FieldKind K>
static Graded<K> wedge_impl(const Graded<K>& a, const Graded<K>& b) {
    require_same_chart(a.chart(), b.chart());
    Graded<K> r(a.chart(), a.degree() + b.degree());
    if (r.degree() > a.chart().dim()) return r;
    for (const auto& [i, f] : a.comps())
        for (const auto& [j, g] : b.comps()) r.add(concat(i, j), f * g);
    return r;
}

MultiField wedge(const MultiField& a, const MultiField& b) { return wedge_impl(a, b); }
FormField wedge(const FormField& a, const FormField& b) { return wedge_impl(a, b); }

// ι_v of a degree-k element against a degree-1 element of the dual kind.
template <FieldKind K, FieldKind L>
static Graded<L> interior(const Graded<K>& v, const Graded<L>& a) {
    require_same_chart(v.chart(), a.chart());
    if (v.degree() != 1) throw std::invalid_argument("contraction needs a degree-1 argument");
    if (a.degree() < 1) throw std::invalid_argument("cannot contract a degree-0 field");
    Graded<L> r(a.chart(), a.degree() - 1);
    for (const auto& [idx, c] : a.comps())
        for (std::size_t m = 0; m < idx.size(); ++m) {
            Poly vm = v.coeff(idx[m]);
            if (vm.is_zero()) continue;
            Poly term = vm * c;
            if (m % 2 == 1) term = -term;
            r.add(without(idx, m), term);
        }
    return r;
}

FormField contract(const MultiField& z, const FormField& a) { return interior(z, a); }
MultiField contract(const FormField& alpha, const MultiField& p) { return interior(alpha, p); }

Poly apply(const MultiField& x, const Poly& f) {
    if (x.degree() != 1) throw std::invalid_argument("apply needs a vector field");
    Poly r(x.chart());
    for (const auto& [idx, c] : x.comps()) r += c * f.partial(idx[0]);
    return r;
}

namespace {

// [P, f] = Σ_m (−1)^{p−m} X_m(f) X_1∧…X̂_m…∧X_p, 1-based m.
MultiField bracket_with_function(const MultiField& p, const Poly& f) {
    const int deg = p.degree();
    MultiField r(p.chart(), deg - 1);
    for (const auto& [idx, c] : p.comps())
        for (std::size_t m = 0; m < idx.size(); ++m) {
            Poly t = c * f.partial(idx[m]);
            if ((deg - static_cast<int>(m) - 1) % 2 != 0) t = -t;
            r.add(without(idx, m), t);
        }
    return r;
}

}  // namespace

MultiField schouten(const MultiField& a, const MultiField& b) {
    require_same_chart(a.chart(), b.chart());
    const Chart& ch = a.chart();
    const int p = a.degree(), q = b.degree();
    if (p == 0 && q == 0) return MultiField(ch, 0);
    if (q == 0) return bracket_with_function(a, b.function_value());
    if (p == 0) {
        MultiField r = bracket_with_function(b, a.function_value());
        return q % 2 == 0 ? r : -r;
    }
    // Decomposable generator formula with the coefficient carried by the first
    // factor of each side: X = (f∂_{I1}, ∂_{I2}, …), Y = (g∂_{J1}, ∂_{J2}, …).
    MultiField r(ch, p + q - 1);
    const Poly one = unit(ch);
    for (const auto& [I, f] : a.comps())
        for (const auto& [J, g] : b.comps())
            for (int ia = 0; ia < p; ++ia)
                for (int jb = 0; jb < q; ++jb) {
                    std::vector<std::pair<int, Poly>> field;  // [X_a, Y_b]
                    if (ia == 0 && jb == 0) {
                        field.emplace_back(J[0], f * g.partial(I[0]));
                        field.emplace_back(I[0], -(g * f.partial(J[0])));
                    } else if (ia == 0) {
                        field.emplace_back(I[0], -f.partial(J[static_cast<std::size_t>(jb)]));
                    } else if (jb == 0) {
                        field.emplace_back(J[0], g.partial(I[static_cast<std::size_t>(ia)]));
                    } else {
                        continue;
                    }
                    Poly mult = (ia != 0 ? f : one) * (jb != 0 ? g : one);
                    IndexTuple rest = concat(without(I, static_cast<std::size_t>(ia)),
                                             without(J, static_cast<std::size_t>(jb)));
                    const bool negative = (ia + jb) % 2 != 0;
                    for (auto& [k, v] : field) {
                        if (v.is_zero()) continue;
                        Poly t = v * mult;
                        if (negative) t = -t;
                        IndexTuple idx{k};
                        idx.insert(idx.end(), rest.begin(), rest.end());
                        r.add(std::move(idx), t);
                    }
                }
    return r;
}

FormField d_complex(const FormField& a) {
    const Chart& ch = a.chart();
    FormField r(ch, a.degree() + 1);
    if (r.degree() > ch.dim()) return r;
    for (const auto& [idx, c] : a.comps())
        for (int l = 0; l < ch.dim(); ++l) {
            IndexTuple j{l};
            j.insert(j.end(), idx.begin(), idx.end());
            r.add(std::move(j), c.partial(l));
        }
    return r;
}

FormField lie_derivative(const MultiField& z, const FormField& a) {
    require_same_chart(z.chart(), a.chart());
    if (z.degree() != 1) throw std::invalid_argument("Lie derivative needs a vector field");
    const Chart& ch = a.chart();
    FormField r(ch, a.degree());
    for (const auto& [idx, c] : a.comps()) {
        r.add(idx, apply(z, c));
        for (std::size_t m = 0; m < idx.size(); ++m) {
            Poly zm = z.coeff(idx[m]);
            for (int l = 0; l < ch.dim(); ++l) {
                Poly dz = zm.partial(l);
                if (dz.is_zero()) continue;
                IndexTuple j = idx;
                j[m] = l;
                r.add(std::move(j), c * dz);
            }
        }
    }
    return r;
}

FormField complex_differential(const Poly& f) { return d_complex(FormField::function(f)); }

FormField complex_differential(const MultiField& f) {
    if (f.degree() != 0) throw std::invalid_argument("complex differential needs a function");
    return complex_differential(f.function_value());
}

Poly evaluate(const MultiField& m, const std::vector<FormField>& alphas) {
    if (static_cast<int>(alphas.size()) != m.degree())
        throw std::invalid_argument("need one form per multivector slot");
    MultiField cur = m;
    for (const auto& a : alphas) cur = contract(a, cur);
    return cur.function_value();
}

}  // namespace cxp
