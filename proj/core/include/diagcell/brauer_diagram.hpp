#pragma once

#include "diagcell/link_state.hpp"
#include "diagcell/permutation.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace diagcell {

// Fixed-point-free involution on 2n points: i is the unprimed point i+1,
// n+i the primed point (i+1)'.
class BrauerDiagram {
public:
    BrauerDiagram() = default;
    explicit BrauerDiagram(std::vector<int> partner);

    static BrauerDiagram identity(std::size_t n);

    std::size_t n() const { return partner_.size() / 2; }
    int partner(std::size_t v) const { return partner_[v]; }
    const std::vector<int>& partners() const { return partner_; }
    std::size_t through_count() const;

    // Canonical text form, e.g. "n=2; [1 2][1' 2']".
    std::string to_string() const;

    friend bool operator==(const BrauerDiagram&, const BrauerDiagram&) = default;
    friend auto operator<=>(const BrauerDiagram&, const BrauerDiagram&) = default;

private:
    std::vector<int> partner_;
};

struct Decomposition {
    LinkState p;
    Permutation sigma;
    LinkState q;
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// The i-th defect of q (primed) is joined to the sigma(i)-th defect of p.
BrauerDiagram assemble(const LinkState& p, const Permutation& sigma, const LinkState& q);
Decomposition decompose(const BrauerDiagram& d);

struct Concatenation {
    std::size_t loops = 0;
    BrauerDiagram diagram;
};

// d1 on the left, d2 on the right; d1's primed points meet d2's unprimed ones.
Concatenation concat_product(const BrauerDiagram& d1, const BrauerDiagram& d2);

BrauerDiagram star(const BrauerDiagram& d);

// Parser for the canonical text form; whitespace is flexible.
BrauerDiagram parse_diagram(std::string_view text);

// All (2n-1)!! diagrams, lexicographic on the partner map.
std::vector<BrauerDiagram> enumerate_brauer_diagrams(std::size_t n);

}  // namespace diagcell
