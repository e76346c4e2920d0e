#include "diagcell/cover.hpp"

#include "diagcell/cell_datum.hpp"
#include "diagcell/idempotents.hpp"
#include "diagcell/link_order.hpp"

#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace diagcell {

std::string status_name(CoverStatus s) {
    switch (s) {
        case CoverStatus::zero: return "zero";
        case CoverStatus::idempotent: return "idempotent";
        case CoverStatus::fail: return "fail";
    }
    return "?";
}

bool is_innermost(const std::vector<int>& subset) {
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = 0; j < subset.size(); ++j)
            if (subset[j] == subset[i] + 1) return false;
    return true;
}

LinkState innermost_state(std::size_t n, const std::vector<int>& subset) {
    std::vector<std::pair<int, int>> pairs;
    for (int i : subset) pairs.emplace_back(i, i + 1);
    return LinkState::from_pairs(n, pairs);
}

std::string Cover::to_string() const {
    std::ostringstream os;
    os << "width " << width << "\nheight " << height << "\ncovers " << (covers ? "yes" : "no") << "\n";
    for (const auto& e : entries) {
        os << "S={";
        for (std::size_t i = 0; i < e.subset.size(); ++i) os << (i ? "," : "") << e.subset[i];
        os << "} " << status_name(e.status) << " dim " << e.dim;
        if (e.q) os << " q=" << e.q->to_string();
        if (!e.note.empty()) os << " (" << e.note << ")";
        os << "\n";
    }
    return os.str();
}

namespace {

struct QuotientCache {
    std::unique_ptr<StructureAlgebra> alg;
    std::unique_ptr<CellDatum> datum;
};

}  // namespace

Cover tl_cover(const StructureAlgebra& a) {
    if (a.family() != Family::tl) throw std::invalid_argument("tl_cover needs a Temperley-Lieb algebra");
    const std::size_t n = a.n();
    if (n < 2) throw std::invalid_argument("tl_cover needs n >= 2");
    Cover c;
    c.width = n - 1;
    std::vector<LinkState> right(a.dim());
    for (std::size_t b = 0; b < a.dim(); ++b) right[b] = right_state(a, b);

    for (std::size_t i = 0; i + 1 < n; ++i) {
        IdealBasis k{&a, {}};
        for (std::size_t b = 0; b < a.dim(); ++b)
            if (right[b].partner(i) == static_cast<int>(i + 1)) k.indices.push_back(static_cast<std::uint32_t>(b));
        c.k.push_back(std::move(k));
    }
    IdealBasis all{&a, {}};
    for (const auto& k : c.k) all = unite(all, k);
    c.covers = all == ideal_I(a, [&] {
                   std::vector<int> lv;
                   for (int t : a.levels())
                       if (t < static_cast<int>(n)) lv.push_back(t);
                   return lv;
               }());

    const CellDatum datum = CellDatum::build(a);
    std::map<int, QuotientCache> quotients;
    std::size_t first_fail = 0;
    const std::size_t w = c.width;
    for (std::size_t size = 1; size <= w; ++size) {
        // Subsets of {1..w} of this size in lexicographic order.
        std::vector<int> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = static_cast<int>(i);
        while (true) {
            CoverEntry e;
            for (int i : idx) e.subset.push_back(i + 1);
            IdealBasis inter = c.k[idx[0]];
            for (std::size_t i = 1; i < size; ++i) inter = intersect(inter, c.k[idx[i]]);
            e.dim = inter.size();
            e.innermost = is_innermost(e.subset);
            if (!e.innermost) {
                e.status = inter.size() == 0 ? CoverStatus::zero : CoverStatus::fail;
                if (inter.size() != 0) e.note = "non-innermost S with nonzero intersection";
            } else if (inter.size() == 0) {
                e.status = CoverStatus::fail;
                e.note = "innermost S with zero intersection";
            } else {
                e.q = innermost_state(n, e.subset);
                auto target = ideal_J_leq(a, *e.q, tl_leq);
                const int t = static_cast<int>(e.q->defect_count());
                if (!(target == inter)) {
                    e.status = CoverStatus::fail;
                    e.note = "intersection differs from J_<=q(S)";
                } else {
                    auto& qc = quotients[t];
                    if (!qc.alg) {
                        qc.alg = std::make_unique<StructureAlgebra>(quotient_below(a, t));
                        qc.datum = std::make_unique<CellDatum>(CellDatum::build(*qc.alg));
                    }
                    const int qli = qc.datum->level_of_t(t);
                    const int qq = qc.datum->level(qli).find_state(*e.q);
                    auto eps = solve_idempotent(*qc.alg, *qc.datum, qli, qq);
                    if (!eps) {
                        e.status = CoverStatus::fail;
                        e.note = "no idempotent generator in the quotient";
                    } else {
                        const int li = datum.level_of_t(t);
                        auto lift = lift_idempotent(a, datum, li, datum.level(li).find_state(*e.q), *eps, tl_leq);
                        e.status = lift.ok() ? CoverStatus::idempotent : CoverStatus::fail;
                        e.note = lift.problem;
                    }
                }
            }
            if (e.status == CoverStatus::fail && first_fail == 0) first_fail = size;
            c.entries.push_back(std::move(e));

            int j = static_cast<int>(size) - 1;
            while (j >= 0 && idx[j] == static_cast<int>(w - size + j)) --j;
            if (j < 0) break;
            ++idx[j];
            for (std::size_t k = j + 1; k < size; ++k) idx[k] = idx[k - 1] + 1;
        }
    }
    c.height = first_fail == 0 ? w : first_fail - 1;
    return c;
}

}  // namespace diagcell
