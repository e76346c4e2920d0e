#include "diagcell/forms.hpp"

#include "diagcell/pair_graph.hpp"

#include <sstream>
#include <stdexcept>

namespace diagcell {

namespace {

std::size_t checked_index(const CellDatum& d, int li, int p, int g, int q) {
    auto i = d.basis_index(li, p, g, q);
    if (i < 0) throw std::invalid_argument("datum triple has no basis element");
    return static_cast<std::size_t>(i);
}

}  // namespace

Scalar s_function(const StructureAlgebra& a, const CellDatum& datum, int li, int sigma1, int q1, int p2, int tau, int p1,
                  int q2) {
    if (datum.level(li).states.empty()) throw std::invalid_argument("M(lambda) is empty");
    auto x = checked_index(datum, li, p1, sigma1, q1);
    auto y = checked_index(datum, li, p2, 0, q2);
    const CellCoord want{li, p1, tau, q2};
    for (const auto& term : a.product(x, y))
        if (datum.coord(term.index) == want) return term.coeff;
    return a.ring().zero();
}

Scalar bilinear_form(const StructureAlgebra& a, const CellDatum& datum, int li, int q, int p, int tau, int p1, int q2) {
    return s_function(a, datum, li, 0, q, p, tau, p1, q2);
}

GramTable gram_table(const StructureAlgebra& a, const CellDatum& datum, int li) {
    const auto& lv = datum.level(li);
    GramTable g;
    g.level = li;
    g.t = lv.t;
    const int m = static_cast<int>(lv.states.size());
    const int k = static_cast<int>(lv.group.size());
    g.value.assign(m, std::vector<std::vector<Scalar>>(m, std::vector<Scalar>(k, a.ring().zero())));
    // One product per (q, p) gives every tau at once.
    for (int q = 0; q < m; ++q)
        for (int p = 0; p < m; ++p) {
            auto x = checked_index(datum, li, 0, 0, q);
            auto y = checked_index(datum, li, p, 0, 0);
            for (const auto& term : a.product(x, y)) {
                const auto& c = datum.coord(term.index);
                if (c && c->level == li && c->p == 0 && c->q == 0) g.value[q][p][c->g] = term.coeff;
            }
        }
    return g;
}

std::string GramTable::to_csv(const CellDatum& datum) const {
    const auto& lv = datum.level(level);
    std::ostringstream os;
    os << "q";
    for (const auto& p : lv.states)
        for (const auto& tau : lv.group) os << ",\"" << p.to_string() << " " << tau.to_string() << "\"";
    os << "\n";
    for (std::size_t q = 0; q < value.size(); ++q) {
        os << "\"" << lv.states[q].to_string() << "\"";
        for (const auto& row : value[q])
            for (const auto& v : row) os << "," << v.to_string();
        os << "\n";
    }
    return os.str();
}

Matrix link_module_matrix(const StructureAlgebra& a, const CellDatum& datum, const AlgebraElement& x, int li) {
    const auto& lv = datum.level(li);
    const std::size_t m = lv.states.size();
    Matrix out(a.ring(), m, m);
    for (std::size_t p = 0; p < m; ++p) {
        auto b = AlgebraElement::basis(a, checked_index(datum, li, static_cast<int>(p), 0, 0));
        auto prod = multiply(x, b);
        for (const auto& [idx, c] : prod.terms()) {
            const auto& ct = datum.coord(idx);
            if (!ct || ct->level != li || ct->q != 0) continue;
            out(ct->p, p) += c;
        }
    }
    return out;
}

std::optional<std::vector<Scalar>> closed_form_row(const CellDatum& datum, const Scalar& delta, int li, int q, int p) {
    const auto& lv = datum.level(li);
    std::vector<Scalar> row(lv.group.size(), delta.ring().zero());
    const auto g = pair_graph(lv.states[q], lv.states[p]);
    if (g.pair_set_size != static_cast<std::size_t>(lv.t)) return row;
    auto sigma = g.defect_bijection();
    if (!sigma) return std::nullopt;
    int k = lv.find_group(*sigma);
    if (k < 0) return std::nullopt;
    row[k] = delta.pow(static_cast<unsigned>(g.loop_count));
    return row;
}

VerificationReport check_form_closed_form(const StructureAlgebra& a, const CellDatum& datum) {
    VerificationReport r;
    r.name = "form closed form " + family_name(a.family()) + "_" + std::to_string(a.n());
    for (std::size_t li = 0; li < datum.levels().size(); ++li) {
        const auto& lv = datum.level(static_cast<int>(li));
        auto g = gram_table(a, datum, static_cast<int>(li));
        for (std::size_t q = 0; q < lv.states.size(); ++q)
            for (std::size_t p = 0; p < lv.states.size(); ++p) {
                ++r.checked;
                auto want = closed_form_row(datum, a.delta(), static_cast<int>(li), static_cast<int>(q), static_cast<int>(p));
                if (!want) {
                    r.fail("t=" + std::to_string(lv.t) + " q=" + lv.states[q].to_string() + " p=" + lv.states[p].to_string() +
                           ": defect bijection outside G(t)");
                    continue;
                }
                if (*want != g.value[q][p])
                    r.fail("t=" + std::to_string(lv.t) + " q=" + lv.states[q].to_string() + " p=" + lv.states[p].to_string() +
                           ": form differs from the pair-graph prediction");
            }
    }
    return r;
}

DaggerResult check_hypothesis_dagger(const CellDatum& datum, const Scalar& delta, int t) {
    DaggerResult r;
    r.t = t;
    int li = datum.level_of_t(t);
    if (li < 0) return r;
    const auto& lv = datum.level(li);
    r.holds = true;
    r.witness.assign(lv.states.size(), std::nullopt);
    r.loops.assign(lv.states.size(), 0);
    for (std::size_t q = 0; q < lv.states.size(); ++q) {
        for (std::size_t p = 0; p < lv.states.size(); ++p) {
            const auto g = pair_graph(lv.states[q], lv.states[p]);
            if (g.pair_set_size != static_cast<std::size_t>(t)) continue;
            if (!delta.pow(static_cast<unsigned>(g.loop_count)).is_invertible()) continue;
            r.witness[q] = static_cast<int>(p);
            r.loops[q] = g.loop_count;
            break;
        }
        if (!r.witness[q]) r.holds = false;
    }
    return r;
}

DaggerResult check_hypothesis_dagger(const StructureAlgebra& a, const CellDatum& datum, int t) {
    return check_hypothesis_dagger(datum, a.delta(), t);
}

}  // namespace diagcell
