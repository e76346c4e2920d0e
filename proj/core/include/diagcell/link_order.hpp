#pragma once

#include "diagcell/link_state.hpp"

#include <optional>

namespace diagcell {

enum class Order { lt, eq, gt, incomparable };

// p <= q when every connection of q is present in p.
bool tl_leq(const LinkState& p, const LinkState& q);
Order tl_compare(const LinkState& a, const LinkState& b);
// Union of connections when that is a planar matching; nullopt is bottom.
std::optional<LinkState> tl_meet(const LinkState& a, const LinkState& b);

}  // namespace diagcell
