#pragma once

#include "diagcell/algebra.hpp"
#include "diagcell/cell_datum.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace diagcell {

struct VerificationReport {
    std::string name;
    bool passed = true;
    std::size_t checked = 0;
    std::vector<std::string> certificates;  // capped at max_certificates

    static constexpr std::size_t max_certificates = 16;
    void fail(std::string certificate);
    void merge(const VerificationReport& other);
    std::string to_string() const;
};

// W1 (basis bijection), W2 (star formula and anti-involution), W3 (r_a
// well-formed modulo I_{<lambda}).
VerificationReport verify_naive_cellular(const StructureAlgebra& a, const CellDatum& datum);

// Single-term products plus the five dependency conditions.
VerificationReport verify_diagram_like(const StructureAlgebra& a, const CellDatum& datum);

// For every basis pair: coefficient delta^i with i the pair-graph loop count,
// and level kept at t2 exactly when the pair set has t2 components.
VerificationReport check_product_formula(const StructureAlgebra& a);

}  // namespace diagcell
