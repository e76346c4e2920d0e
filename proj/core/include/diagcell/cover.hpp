#pragma once

#include "diagcell/algebra.hpp"
#include "diagcell/ideals.hpp"

#include <optional>
#include <string>
#include <vector>

namespace diagcell {

enum class CoverStatus { zero, idempotent, fail };
std::string status_name(CoverStatus s);

struct CoverEntry {
    std::vector<int> subset;  // one-based
    bool innermost = false;
    std::optional<LinkState> q;  // q(S) when innermost
    std::size_t dim = 0;         // dimension of the intersection
    CoverStatus status = CoverStatus::fail;
    std::string note;
};

struct Cover {
    std::vector<IdealBasis> k;  // K_1 .. K_w
    std::size_t width = 0;
    std::size_t height = 0;
    bool covers = false;  // K_1 + ... + K_w = I_{<=n-1}
    std::vector<CoverEntry> entries;  // nonempty subsets, by size then lexicographic

    std::string to_string() const;
};

// No two consecutive elements.
bool is_innermost(const std::vector<int>& subset);
// Cup i-(i+1) for each i in S (one-based), defects elsewhere.
LinkState innermost_state(std::size_t n, const std::vector<int>& subset);

// K_i = span of diagrams with a right cup i'-(i+1)'. Every nonempty S is
// classified; nonzero intersections must equal J_{<=q(S)} and are tested for
// an idempotent generator by solving in A/I_{<t} and lifting.
Cover tl_cover(const StructureAlgebra& a);

}  // namespace diagcell
