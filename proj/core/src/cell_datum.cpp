#include "diagcell/cell_datum.hpp"

#include <algorithm>
#include <stdexcept>

namespace diagcell {

int CellLevel::find_group(const Permutation& g) const {
    auto it = group_index.find(g);
    return it == group_index.end() ? -1 : it->second;
}

int CellLevel::find_state(const LinkState& s) const {
    auto it = state_index.find(s);
    return it == state_index.end() ? -1 : it->second;
}

CellDatum CellDatum::for_family(Family f, std::size_t n, const std::vector<int>& only_levels) {
    CellDatum d;
    d.family_ = f;
    d.n_ = n;
    const StateFamily sf = state_family(f);
    for (int t = static_cast<int>(n % 2); t <= static_cast<int>(n); t += 2) {
        if (!only_levels.empty() && std::find(only_levels.begin(), only_levels.end(), t) == only_levels.end()) continue;
        CellLevel lv;
        lv.t = t;
        lv.group = level_group(f, static_cast<std::size_t>(t));
        lv.states = enumerate_link_states(n, static_cast<std::size_t>(t), sf);
        if (lv.states.empty()) continue;
        for (std::size_t k = 0; k < lv.group.size(); ++k) lv.group_index.emplace(lv.group[k], static_cast<int>(k));
        for (std::size_t k = 0; k < lv.states.size(); ++k) lv.state_index.emplace(lv.states[k], static_cast<int>(k));
        const std::size_t g = lv.group.size();
        lv.mul.assign(g, std::vector<int>(g, -1));
        lv.inv.assign(g, -1);
        for (std::size_t a = 0; a < g; ++a) {
            lv.inv[a] = lv.find_group(lv.group[a].inverse());
            for (std::size_t b = 0; b < g; ++b) lv.mul[a][b] = lv.find_group(lv.group[a] * lv.group[b]);
        }
        d.levels_.push_back(std::move(lv));
    }
    return d;
}

CellDatum CellDatum::build(const StructureAlgebra& a) {
    if (!a.has_diagrams()) throw std::invalid_argument("cell datum needs a diagram basis");
    CellDatum d = for_family(a.family(), a.n(), a.levels());
    d.attached_ = true;
    d.index_.resize(d.levels_.size());
    for (std::size_t li = 0; li < d.levels_.size(); ++li) {
        const auto& lv = d.levels_[li];
        d.index_[li].assign(lv.states.size() * lv.group.size() * lv.states.size(), -1);
    }
    d.coord_.assign(a.dim(), std::nullopt);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        auto dec = decompose(a.diagram(i));
        int li = d.level_of_t(static_cast<int>(dec.sigma.degree()));
        if (li < 0) {
            d.problems_.push_back("basis " + std::to_string(i) + " lies at a level outside Lambda");
            continue;
        }
        const auto& lv = d.levels_[li];
        int p = lv.find_state(dec.p), g = lv.find_group(dec.sigma), q = lv.find_state(dec.q);
        if (p < 0 || g < 0 || q < 0) {
            d.problems_.push_back("basis " + std::to_string(i) + " [" + a.label(i) + "] has no datum triple");
            continue;
        }
        auto& slot = d.index_[li][(static_cast<std::size_t>(p) * lv.group.size() + g) * lv.states.size() + q];
        if (slot >= 0) {
            d.problems_.push_back("basis " + std::to_string(i) + " and " + std::to_string(slot) + " share a datum triple");
            continue;
        }
        slot = static_cast<std::int64_t>(i);
        d.coord_[i] = CellCoord{li, p, g, q};
    }
    for (std::size_t li = 0; li < d.levels_.size(); ++li)
        for (std::size_t k = 0; k < d.index_[li].size(); ++k)
            if (d.index_[li][k] < 0) {
                d.problems_.push_back("datum triple at t=" + std::to_string(d.levels_[li].t) + " slot " + std::to_string(k) +
                                      " has no basis element");
                break;
            }
    return d;
}

int CellDatum::level_of_t(int t) const {
    for (std::size_t i = 0; i < levels_.size(); ++i)
        if (levels_[i].t == t) return static_cast<int>(i);
    return -1;
}

std::size_t CellDatum::cell_count() const {
    std::size_t c = 0;
    for (const auto& lv : levels_) c += lv.states.size() * lv.states.size() * lv.group.size();
    return c;
}

std::int64_t CellDatum::basis_index(int li, int p, int g, int q) const {
    const auto& lv = levels_[li];
    return index_[li][(static_cast<std::size_t>(p) * lv.group.size() + g) * lv.states.size() + q];
}

}  // namespace diagcell
