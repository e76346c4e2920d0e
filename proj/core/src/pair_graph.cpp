#include "diagcell/pair_graph.hpp"

#include <numeric>
#include <stdexcept>

namespace diagcell {

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::optional<Permutation> PairGraph::defect_bijection() const {
    if (q_defect_count != p_to_q.size()) return std::nullopt;
    for (int v : p_to_q)
        if (v < 0 || v >= static_cast<int>(p_to_q.size())) return std::nullopt;
    return Permutation(p_to_q);
}

PairGraph pair_graph(const LinkState& q, const LinkState& p) {
    if (q.n() != p.n()) throw std::invalid_argument("pair_graph: point counts differ");
    const std::size_t n = q.n();
    DisjointSet ds(n);
    for (std::size_t i = 0; i < n; ++i) {
        ds.unite(static_cast<int>(i), q.partner(i));
        ds.unite(static_cast<int>(i), p.partner(i));
    }

    PairGraph g;
    g.n = n;
    g.component.assign(n, -1);
    std::vector<int> root_id(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        int r = ds.find(static_cast<int>(i));
        if (root_id[r] < 0) root_id[r] = static_cast<int>(g.component_count++);
        g.component[i] = root_id[r];
    }

    std::vector<int> q_defect_in(g.component_count, -1);
    std::vector<char> has_defect(g.component_count, 0);
    auto qd = q.defects();
    g.q_defect_count = qd.size();
    for (std::size_t k = 0; k < qd.size(); ++k) {
        int c = g.component[qd[k]];
        q_defect_in[c] = static_cast<int>(k);
        has_defect[c] = 1;
    }
    auto pd = p.defects();
    g.p_to_q.assign(pd.size(), -1);
    for (std::size_t k = 0; k < pd.size(); ++k) {
        int c = g.component[pd[k]];
        has_defect[c] = 1;
        if (q_defect_in[c] >= 0) {
            g.p_to_q[k] = q_defect_in[c];
            ++g.pair_set_size;
        }
    }
    for (std::size_t c = 0; c < g.component_count; ++c) g.loop_count += !has_defect[c];
    return g;
}

}  // namespace diagcell
