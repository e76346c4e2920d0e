#pragma once

#include "diagcell/algebra.hpp"
#include "diagcell/cell_datum.hpp"
#include "diagcell/matrix.hpp"
#include "diagcell/verify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace diagcell {

// s(sigma1, q1, p2, tau): coefficient of C_{p1,q2}^{tau} in C_{p1,q1}^{sigma1} C_{p2,q2}^{1}.
// Group and state arguments are indices into the datum level. p1, q2 are auxiliary.
Scalar s_function(const StructureAlgebra& a, const CellDatum& datum, int li, int sigma1, int q1, int p2, int tau,
                  int p1 = 0, int q2 = 0);

// <C_q, C_p>_tau = s(1, q, p, tau).
Scalar bilinear_form(const StructureAlgebra& a, const CellDatum& datum, int li, int q, int p, int tau, int p1 = 0,
                     int q2 = 0);

struct GramTable {
    int level = 0;  // datum level index
    int t = 0;
    // value[q][p][tau]
    std::vector<std::vector<std::vector<Scalar>>> value;

    // Rows q, one column per (p, tau); cells use the exact scalar text.
    std::string to_csv(const CellDatum& datum) const;
};

GramTable gram_table(const StructureAlgebra& a, const CellDatum& datum, int li);

// Entry (p', p) = sum over sigma' of r_x(p', sigma', p).
Matrix link_module_matrix(const StructureAlgebra& a, const CellDatum& datum, const AlgebraElement& x, int li);

// Pair-graph prediction: delta^i at tau = sigma(p, q) when the pair set has t
// components, zero otherwise. nullopt when sigma(p, q) is outside G(t).
std::optional<std::vector<Scalar>> closed_form_row(const CellDatum& datum, const Scalar& delta, int li, int q, int p);

// Compares every Gram entry at every level with closed_form_row.
VerificationReport check_form_closed_form(const StructureAlgebra& a, const CellDatum& datum);

struct DaggerResult {
    int t = 0;
    bool holds = false;
    // Per q in M(t): first witness p, with the loop count of the pair graph.
    std::vector<std::optional<int>> witness;
    std::vector<std::size_t> loops;
};

DaggerResult check_hypothesis_dagger(const CellDatum& datum, const Scalar& delta, int t);
DaggerResult check_hypothesis_dagger(const StructureAlgebra& a, const CellDatum& datum, int t);

}  // namespace diagcell
