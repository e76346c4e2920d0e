#pragma once

#include "diagcell/algebra.hpp"
#include "diagcell/link_state.hpp"
#include "diagcell/permutation.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace diagcell {

struct CellLevel {
    int t = 0;
    std::vector<Permutation> group;   // identity first
    std::vector<LinkState> states;
    std::vector<std::vector<int>> mul;  // mul[a][b] = index of group[a] * group[b]
    std::vector<int> inv;
    std::map<Permutation, int> group_index;
    std::map<LinkState, int> state_index;

    int find_group(const Permutation& g) const;
    int find_state(const LinkState& s) const;
};

struct CellCoord {
    int level;  // index into CellDatum::levels
    int p;
    int g;
    int q;
    friend bool operator==(const CellCoord&, const CellCoord&) = default;
};

// (Lambda, G, M, C): levels ascending by t, with the map C to basis indices
// once attached to an algebra.
class CellDatum {
public:
    // Datum only; no algebra needed. `only_levels` restricts Lambda.
    static CellDatum for_family(Family f, std::size_t n, const std::vector<int>& only_levels = {});
    // Datum for the algebra's family restricted to its levels, attached to its basis.
    static CellDatum build(const StructureAlgebra& a);

    Family family() const { return family_; }
    std::size_t n() const { return n_; }
    const std::vector<CellLevel>& levels() const { return levels_; }
    const CellLevel& level(int li) const { return levels_[li]; }
    int level_of_t(int t) const;  // -1 when absent

    bool attached() const { return attached_; }
    std::size_t cell_count() const;
    // Basis index of C_{p,q}^g, or -1 when the datum and algebra disagree.
    std::int64_t basis_index(int li, int p, int g, int q) const;
    std::int64_t basis_index(const CellCoord& c) const { return basis_index(c.level, c.p, c.g, c.q); }
    const std::optional<CellCoord>& coord(std::size_t basis) const { return coord_[basis]; }
    // Problems found while attaching (W1 certificates).
    const std::vector<std::string>& attach_problems() const { return problems_; }

private:
    Family family_ = Family::tl;
    std::size_t n_ = 0;
    bool attached_ = false;
    std::vector<CellLevel> levels_;
    std::vector<std::vector<std::int64_t>> index_;  // per level, flattened (p, g, q)
    std::vector<std::optional<CellCoord>> coord_;
    std::vector<std::string> problems_;
};

}  // namespace diagcell
