#include "diagcell/idempotents.hpp"

#include "diagcell/detail/field.hpp"
#include "diagcell/detail/sparse_echelon.hpp"
#include "diagcell/forms.hpp"
#include "diagcell/link_order.hpp"
#include "diagcell/matrix.hpp"
#include "diagcell/pair_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace diagcell {

bool is_idempotent(const AlgebraElement& e) { return multiply(e, e) == e; }

bool fixes_ideal(const AlgebraElement& e, const IdealBasis& j, std::string* witness) {
    const auto& a = e.owner();
    for (auto y : j.indices) {
        auto b = AlgebraElement::basis(a, y);
        if (!(multiply(b, e) == b)) {
            if (witness) *witness = "y e != y for y = " + a.label(y);
            return false;
        }
    }
    return true;
}

namespace {

IdealBasis cell_ideal(const StructureAlgebra& a, const CellDatum& datum, int li, int q) {
    IdealBasis j{&a, {}};
    const auto& lv = datum.level(li);
    for (std::size_t p = 0; p < lv.states.size(); ++p)
        for (std::size_t g = 0; g < lv.group.size(); ++g) {
            auto i = datum.basis_index(li, static_cast<int>(p), static_cast<int>(g), q);
            if (i >= 0) j.indices.push_back(static_cast<std::uint32_t>(i));
        }
    std::sort(j.indices.begin(), j.indices.end());
    return j;
}

}  // namespace

std::optional<AlgebraElement> solve_idempotent(const StructureAlgebra& q_alg, const CellDatum& datum, int li, int q) {
    const auto& lv = datum.level(li);
    const std::size_t m = lv.states.size(), k = lv.group.size();
    auto gram = gram_table(q_alg, datum, li);
    // Row tau, column (p', sigma'): <C_q, C_p'>_{tau sigma'^{-1}}.
    Matrix sys(q_alg.ring(), k, m * k);
    Matrix rhs(q_alg.ring(), k, 1);
    for (std::size_t tau = 0; tau < k; ++tau) {
        rhs(tau, 0) = tau == 0 ? q_alg.ring().one() : q_alg.ring().zero();
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t s = 0; s < k; ++s) sys(tau, p * k + s) = gram.value[q][p][lv.mul[tau][lv.inv[s]]];
    }
    auto alpha = solve(sys, rhs);
    if (!alpha) return std::nullopt;
    AlgebraElement e(q_alg);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t s = 0; s < k; ++s) {
            const auto& c = (*alpha)(p * k + s, 0);
            if (c.is_zero()) continue;
            auto idx = datum.basis_index(li, static_cast<int>(p), static_cast<int>(s), q);
            if (idx < 0) throw std::logic_error("datum triple has no basis element");
            e.add(static_cast<std::uint32_t>(idx), c);
        }
    if (!is_idempotent(e) || !fixes_ideal(e, cell_ideal(q_alg, datum, li, q))) return std::nullopt;
    return e;
}

AlgebraElement ez_idempotent(const StructureAlgebra& q_alg, const CellDatum& datum, int li, int q, int p) {
    const auto& lv = datum.level(li);
    const auto g = pair_graph(lv.states[q], lv.states[p]);
    if (g.pair_set_size != static_cast<std::size_t>(lv.t)) throw std::invalid_argument("witness pair set is too small");
    auto sigma = g.defect_bijection();
    int s = sigma ? lv.find_group(sigma->inverse()) : -1;
    if (s < 0) throw std::invalid_argument("witness bijection is outside G(t)");
    Scalar w = q_alg.delta().pow(static_cast<unsigned>(g.loop_count));
    if (!w.is_invertible()) throw std::invalid_argument("delta^i is not invertible");
    auto idx = datum.basis_index(li, p, s, q);
    if (idx < 0) throw std::logic_error("datum triple has no basis element");
    return AlgebraElement::basis(q_alg, static_cast<std::size_t>(idx)).scaled(w.inverse());
}

std::vector<int> stay_set(const StructureAlgebra& a, const CellDatum& datum, int li, int q) {
    const auto& lv = datum.level(li);
    std::vector<int> out;
    const auto x = datum.basis_index(li, 0, 0, q);
    for (std::size_t p = 0; p < lv.states.size(); ++p) {
        const auto y = datum.basis_index(li, static_cast<int>(p), 0, 0);
        auto pr = a.product(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
        bool stays = pr.empty() || (datum.coord(pr[0].index) && datum.coord(pr[0].index)->level == li);
        if (stays) out.push_back(static_cast<int>(p));
    }
    return out;
}

namespace {

template <class F>
std::size_t span_rank(const F& f, const std::vector<AlgebraElement>& vs, std::size_t ncols) {
    detail::SparseEchelon<F> ech(f, ncols);
    for (const auto& v : vs) {
        detail::SparseVec<F> sv;
        for (const auto& [i, c] : v.terms()) sv.emplace_back(i, f.from(c));
        ech.insert(sv);
    }
    return ech.rank();
}

}  // namespace

LiftResult lift_idempotent(const StructureAlgebra& a, const CellDatum& datum, int li, int q, const AlgebraElement& eps,
                           const StateLeq& leq) {
    LiftResult r{AlgebraElement(a)};
    const auto& lv = datum.level(li);
    auto keep = stay_set(a, datum, li, q);
    std::vector<char> in_s(lv.states.size(), 0);
    for (int p : keep) in_s[p] = 1;
    const auto& quo = eps.owner();
    for (const auto& [i, c] : eps.terms()) {
        auto ai = quo.parent_index(i);
        const auto& ct = datum.coord(ai);
        if (!ct || ct->level != li || ct->q != q) {
            r.problem = "eps has a term outside J_q";
            return r;
        }
        if (in_s[ct->p]) r.e.add(ai, c);
    }
    r.idempotent = is_idempotent(r.e);
    if (!r.idempotent) r.problem = "e_q is not idempotent";

    auto target = ideal_J_leq(a, datum.level(li).states[q], leq);
    r.target_dim = target.size();
    std::vector<AlgebraElement> products;
    products.reserve(a.dim());
    r.inside = true;
    for (std::size_t b = 0; b < a.dim(); ++b) {
        products.push_back(multiply(AlgebraElement::basis(a, b), r.e));
        for (const auto& [i, c] : products.back().terms())
            if (!target.contains(i)) r.inside = false;
    }
    if (!r.inside && r.problem.empty()) r.problem = "A e_q leaves J_<=q";
    r.span_rank = detail::with_field(a.ring(), [&](const auto& f) { return span_rank(f, products, a.dim()); });
    r.generates = r.inside && r.span_rank == r.target_dim;
    if (!r.generates && r.problem.empty()) r.problem = "A e_q has rank " + std::to_string(r.span_rank) + " not " +
                                                       std::to_string(r.target_dim);
    return r;
}

std::pair<BrauerDiagram, BrauerDiagram> tl_factorize(const BrauerDiagram& d, const LinkState& q) {
    const auto dec = decompose(d);
    const auto& q_low = dec.q;
    const std::size_t n = q.n();
    if (q_low.n() != n) throw std::invalid_argument("size mismatch");
    if (q_low == q || !tl_leq(q_low, q)) throw std::invalid_argument("right state is not strictly below q");
    const auto defects = q.defects();
    const std::size_t t = defects.size();
    if (t == 0) throw std::invalid_argument("q has no defects");
    const std::size_t m = n - t;

    // Right factor: cups on 0..m-1, defects m..n-1 joined in order to q's defects.
    std::vector<int> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<int>(i);
    for (std::size_t i = 0; i + 1 < m; i += 2) {
        r[i] = static_cast<int>(i + 1);
        r[i + 1] = static_cast<int>(i);
    }

    // Left factor's right state: slot k of q's defects sits at 0 (k = 0) or m+k,
    // with a zigzag of cups 1-2, 3-4, ..., (m-1)-m between.
    auto pos = [&](std::size_t k) { return k == 0 ? std::size_t{0} : m + k; };
    std::vector<int> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<int>(i);
    for (std::size_t i = 1; i + 1 <= m; i += 2) {
        s[i] = static_cast<int>(i + 1);
        s[i + 1] = static_cast<int>(i);
    }
    std::vector<int> slot_of(n, -1);
    for (std::size_t k = 0; k < t; ++k) slot_of[defects[k]] = static_cast<int>(k);
    for (std::size_t k = 0; k < t; ++k) {
        int other = q_low.partner(defects[k]);
        if (slot_of[other] < 0) throw std::logic_error("q' joins a defect of q to a non-defect");
        s[pos(k)] = static_cast<int>(pos(static_cast<std::size_t>(slot_of[other])));
    }

    const LinkState rs(std::move(r)), ss(std::move(s));
    auto left = assemble(dec.p, dec.sigma, ss);
    auto right = assemble(rs, Permutation::identity(t), q);
    auto c = concat_product(left, right);
    if (c.loops != 0 || !(c.diagram == d)) throw std::logic_error("factorization does not reproduce d");
    return {left, right};
}

}  // namespace diagcell
