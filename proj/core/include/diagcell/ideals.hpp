#pragma once

#include "diagcell/algebra.hpp"
#include "diagcell/link_state.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace diagcell {

// Span of a subset of the owner's basis.
struct IdealBasis {
    const StructureAlgebra* owner = nullptr;
    std::vector<std::uint32_t> indices;  // sorted

    std::size_t size() const { return indices.size(); }
    bool contains(std::uint32_t i) const;
    friend bool operator==(const IdealBasis& a, const IdealBasis& b) { return a.indices == b.indices; }
};

IdealBasis ideal_I(const StructureAlgebra& a, const std::vector<int>& x);
// Basis elements whose right link state is exactly q.
IdealBasis ideal_J(const StructureAlgebra& a, const LinkState& q);
using StateLeq = std::function<bool(const LinkState&, const LinkState&)>;
// Basis elements whose right link state q' satisfies leq(q', q).
IdealBasis ideal_J_leq(const StructureAlgebra& a, const LinkState& q, const StateLeq& leq);

IdealBasis intersect(const IdealBasis& a, const IdealBasis& b);
IdealBasis unite(const IdealBasis& a, const IdealBasis& b);

// Closure of the span under left (resp. right) multiplication by every basis element.
bool is_left_ideal(const IdealBasis& j);
bool is_right_ideal(const IdealBasis& j);
bool is_star_closed(const IdealBasis& j);

// Right link state of a diagram basis element.
LinkState right_state(const StructureAlgebra& a, std::size_t i);
LinkState left_state(const StructureAlgebra& a, std::size_t i);

}  // namespace diagcell
