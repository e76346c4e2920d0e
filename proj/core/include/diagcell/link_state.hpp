#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace diagcell {

enum class StateFamily { brauer, planar, annular };

// Involution on {0..n-1}; fixed points are defects.
class LinkState {
public:
    LinkState() = default;
    explicit LinkState(std::vector<int> partner);

    static LinkState all_defects(std::size_t n);
    // One-based connection list; unlisted points become defects.
    static LinkState from_pairs(std::size_t n, std::initializer_list<std::pair<int, int>> pairs);
    static LinkState from_pairs(std::size_t n, const std::vector<std::pair<int, int>>& pairs);

    std::size_t n() const { return partner_.size(); }
    int partner(std::size_t i) const { return partner_[i]; }
    const std::vector<int>& partners() const { return partner_; }
    bool is_defect(std::size_t i) const { return partner_[i] == static_cast<int>(i); }
    std::size_t defect_count() const;
    std::vector<int> defects() const;
    // Zero-based pairs (i, j) with i < j, ordered by i.
    std::vector<std::pair<int, int>> connections() const;

    bool is_planar() const;
    bool is_annular() const;
    bool in_family(StateFamily f) const;

    // "{1,3}{2,6} | 4 5 7" (one-based).
    std::string to_string() const;

    friend bool operator==(const LinkState&, const LinkState&) = default;
    friend auto operator<=>(const LinkState&, const LinkState&) = default;

private:
    std::vector<int> partner_;
};

// Lexicographic on the partner map; empty when n - t is odd.
std::vector<LinkState> enumerate_link_states(std::size_t n, std::size_t t, StateFamily family);

LinkState rotate(const LinkState& q);

// Deterministic run of the live-vertex algorithm: smallest live vertex first,
// nearest eligible endpoint, smaller index on ties.
LinkState greedy_partner(const LinkState& q);

}  // namespace diagcell
