#pragma once

#include "diagcell/algebra.hpp"
#include "diagcell/cell_datum.hpp"
#include "diagcell/ideals.hpp"

#include <optional>
#include <string>
#include <utility>

namespace diagcell {

// Idempotent generator of pi(J_q) inside the quotient q_alg, where the level
// `li` of `datum` is minimal. Solves the form system and then checks
// e^2 = e and y e = y for every basis y of J_q. nullopt when the system is
// inconsistent or the check fails.
std::optional<AlgebraElement> solve_idempotent(const StructureAlgebra& q_alg, const CellDatum& datum, int li, int q);

// delta^{-i} C_{p,q}^{sigma(p,q)^{-1}} from a witness p with pair set of full
// size and i loops. Throws when the witness is invalid or delta^i is not a unit.
AlgebraElement ez_idempotent(const StructureAlgebra& q_alg, const CellDatum& datum, int li, int q, int p);

// True when y e = y for every basis element y of j (all of e's owner).
bool fixes_ideal(const AlgebraElement& e, const IdealBasis& j, std::string* witness = nullptr);
bool is_idempotent(const AlgebraElement& e);

struct LiftResult {
    AlgebraElement e;
    bool idempotent = false;
    bool inside = false;     // A e lies in J_{<=q}
    bool generates = false;  // A e spans J_{<=q}
    std::size_t span_rank = 0;
    std::size_t target_dim = 0;
    std::string problem;

    bool ok() const { return idempotent && inside && generates; }
};

// S_q: states p whose product C_{p1,q} C_{p,q2} is zero or stays at the level of q.
std::vector<int> stay_set(const StructureAlgebra& a, const CellDatum& datum, int li, int q);

// e_q = rho_q(eps~): pulls eps back from the quotient along parent_index and
// keeps the basis elements C_{p',q}^{sigma'} with p' in S_q.
LiftResult lift_idempotent(const StructureAlgebra& a, const CellDatum& datum, int li, int q, const AlgebraElement& eps,
                           const StateLeq& leq);

// d has right state q' strictly below q in the TL order, t(q) >= 1.
// Returns (left, right) with concat(left, right) = d and no loops; right has
// right state exactly q. The through strand meeting the first defect of q
// detours around the cups of the right factor.
std::pair<BrauerDiagram, BrauerDiagram> tl_factorize(const BrauerDiagram& d, const LinkState& q);

}  // namespace diagcell
