#pragma once

#include "diagcell/link_state.hpp"
#include "diagcell/permutation.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace diagcell {

// Graph on {0..n-1} with the connections of q as left edges and those of p
// as right edges.
struct PairGraph {
    std::size_t n = 0;
    std::vector<int> component;       // component id per vertex
    std::size_t component_count = 0;
    std::size_t loop_count = 0;       // components free of defects
    std::size_t pair_set_size = 0;    // components holding a q-defect and a p-defect
    // For each defect index of p, the defect index of q in the same
    // component, or -1.
    std::vector<int> p_to_q;
    std::size_t q_defect_count = 0;

    // When every p-defect is paired (pair set of size t_p = t_q), the induced
    // bijection from p-defect indices to q-defect indices.
    std::optional<Permutation> defect_bijection() const;
};

PairGraph pair_graph(const LinkState& q, const LinkState& p);

}  // namespace diagcell
