#include "diagcell/ideals.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>

namespace diagcell {

bool IdealBasis::contains(std::uint32_t i) const { return std::binary_search(indices.begin(), indices.end(), i); }

LinkState right_state(const StructureAlgebra& a, std::size_t i) {
    if (!a.has_diagrams()) throw std::invalid_argument("algebra has no diagram basis");
    return decompose(a.diagram(i)).q;
}

LinkState left_state(const StructureAlgebra& a, std::size_t i) {
    if (!a.has_diagrams()) throw std::invalid_argument("algebra has no diagram basis");
    return decompose(a.diagram(i)).p;
}

IdealBasis ideal_I(const StructureAlgebra& a, const std::vector<int>& x) {
    std::set<int> xs(x.begin(), x.end());
    IdealBasis r{&a, {}};
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (xs.count(a.level(i))) r.indices.push_back(static_cast<std::uint32_t>(i));
    return r;
}

IdealBasis ideal_J(const StructureAlgebra& a, const LinkState& q) {
    IdealBasis r{&a, {}};
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (right_state(a, i) == q) r.indices.push_back(static_cast<std::uint32_t>(i));
    return r;
}

IdealBasis ideal_J_leq(const StructureAlgebra& a, const LinkState& q, const StateLeq& leq) {
    IdealBasis r{&a, {}};
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (leq(right_state(a, i), q)) r.indices.push_back(static_cast<std::uint32_t>(i));
    return r;
}

IdealBasis intersect(const IdealBasis& a, const IdealBasis& b) {
    IdealBasis r{a.owner, {}};
    std::set_intersection(a.indices.begin(), a.indices.end(), b.indices.begin(), b.indices.end(),
                          std::back_inserter(r.indices));
    return r;
}

IdealBasis unite(const IdealBasis& a, const IdealBasis& b) {
    IdealBasis r{a.owner, {}};
    std::set_union(a.indices.begin(), a.indices.end(), b.indices.begin(), b.indices.end(), std::back_inserter(r.indices));
    return r;
}

namespace {

// Products of basis elements are sparse, so membership in a basis span is
// a support test.
bool closed(const IdealBasis& j, bool left) {
    const auto& a = *j.owner;
    for (std::size_t b = 0; b < a.dim(); ++b)
        for (auto v : j.indices) {
            auto pr = left ? a.product(b, v) : a.product(v, b);
            for (const auto& t : pr)
                if (!j.contains(t.index)) return false;
        }
    return true;
}

}  // namespace

bool is_left_ideal(const IdealBasis& j) { return closed(j, true); }
bool is_right_ideal(const IdealBasis& j) { return closed(j, false); }

bool is_star_closed(const IdealBasis& j) {
    for (auto v : j.indices)
        if (!j.contains(j.owner->star(v))) return false;
    return true;
}

}  // namespace diagcell
