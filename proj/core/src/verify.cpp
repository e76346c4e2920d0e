#include "diagcell/verify.hpp"

#include "diagcell/pair_graph.hpp"

#include <map>
#include <sstream>
#include <tuple>
#include <utility>

namespace diagcell {

void VerificationReport::fail(std::string certificate) {
    passed = false;
    if (certificates.size() < max_certificates) certificates.push_back(std::move(certificate));
}

void VerificationReport::merge(const VerificationReport& other) {
    passed = passed && other.passed;
    checked += other.checked;
    for (const auto& c : other.certificates)
        if (certificates.size() < max_certificates) certificates.push_back(c);
}

std::string VerificationReport::to_string() const {
    std::ostringstream os;
    os << name << ": " << (passed ? "pass" : "FAIL") << " (" << checked << " checks)";
    for (const auto& c : certificates) os << "\n  " << c;
    return os.str();
}

namespace {

std::string coord_text(const CellDatum& d, const CellCoord& c) {
    const auto& lv = d.level(c.level);
    return "C[" + lv.states[c.p].to_string() + " ; " + lv.group[c.g].to_string() + " ; " + lv.states[c.q].to_string() +
           "]";
}

void check_w1(const StructureAlgebra& a, const CellDatum& datum, VerificationReport& r) {
    for (const auto& p : datum.attach_problems()) r.fail("W1: " + p);
    ++r.checked;
    if (datum.cell_count() != a.dim())
        r.fail("W1: datum has " + std::to_string(datum.cell_count()) + " triples, algebra dimension " +
               std::to_string(a.dim()));
}

void check_w2(const StructureAlgebra& a, const CellDatum& datum, VerificationReport& r) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const auto& c = datum.coord(i);
        if (!c) continue;
        ++r.checked;
        const auto& lv = datum.level(c->level);
        auto want = datum.basis_index(c->level, c->q, lv.inv[c->g], c->p);
        if (want != static_cast<std::int64_t>(a.star(i)))
            r.fail("W2: star of basis " + std::to_string(i) + " " + coord_text(datum, *c) + " is basis " +
                   std::to_string(a.star(i)));
    }
    std::string w;
    ++r.checked;
    if (!check_star_antiautomorphism(a, &w)) r.fail("W2: " + w);
    ++r.checked;
    if (!check_unit(a, &w)) r.fail("unit: " + w);
}

// key (p', rho = sigma' sigma^{-1}) -> coefficient, for one product a*C_{p,q}^sigma
using RMap = std::map<std::pair<int, int>, Scalar>;

void check_w3(const StructureAlgebra& a, const CellDatum& datum, VerificationReport& r) {
    for (std::size_t x = 0; x < a.dim(); ++x) {
        std::map<std::pair<int, int>, std::pair<RMap, std::size_t>> ref;  // (level, p) -> map, witness basis
        for (std::size_t b = 0; b < a.dim(); ++b) {
            const auto& cb = datum.coord(b);
            if (!cb) continue;
            ++r.checked;
            const auto& lv = datum.level(cb->level);
            RMap m;
            bool bad = false;
            for (const auto& term : a.product(x, b)) {
                const auto& ct = datum.coord(term.index);
                if (!ct) continue;
                if (ct->level < cb->level) continue;
                if (ct->level > cb->level || ct->q != cb->q) {
                    r.fail("W3: a=" + std::to_string(x) + " times " + coord_text(datum, *cb) + " has term " +
                           coord_text(datum, *ct) + " outside I_<=lambda with right state q");
                    bad = true;
                    break;
                }
                int rho = lv.mul[ct->g][lv.inv[cb->g]];
                m[{ct->p, rho}] = term.coeff;
            }
            if (bad) continue;
            auto key = std::make_pair(cb->level, cb->p);
            auto it = ref.find(key);
            if (it == ref.end()) {
                ref.emplace(key, std::make_pair(std::move(m), b));
                continue;
            }
            if (!(it->second.first == m))
                r.fail("W3: r_a for a=" + std::to_string(x) + " differs between " +
                       coord_text(datum, *datum.coord(it->second.second)) + " and " + coord_text(datum, *cb));
        }
    }
}

}  // namespace

VerificationReport verify_naive_cellular(const StructureAlgebra& a, const CellDatum& datum) {
    VerificationReport r;
    r.name = "naive-cellular " + family_name(a.family()) + "_" + std::to_string(a.n());
    check_w1(a, datum, r);
    check_w2(a, datum, r);
    check_w3(a, datum, r);
    return r;
}

VerificationReport verify_diagram_like(const StructureAlgebra& a, const CellDatum& datum) {
    VerificationReport r;
    r.name = "diagram-like " + family_name(a.family()) + "_" + std::to_string(a.n());
    check_w1(a, datum, r);
    check_w2(a, datum, r);

    // Each map holds the first value seen for a key and the basis pair that produced it.
    using Witness = std::pair<std::size_t, std::size_t>;
    std::map<std::tuple<int, int, int, int>, std::pair<Scalar, Witness>> kappa;
    std::map<std::tuple<int, int, int, int>, std::pair<int, Witness>> lambda;
    std::map<std::tuple<int, int, int, int, int, int>, std::pair<int, Witness>> sigma;
    std::map<std::tuple<int, int, int, int, int, int>, std::pair<std::pair<int, int>, Witness>> left;
    std::map<std::tuple<int, int, int, int, int>, std::pair<int, Witness>> shift;

    auto pair_text = [](std::size_t i, std::size_t j) {
        return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    };
    auto check = [&](auto& table, const auto& key, const auto& value, std::size_t i, std::size_t j, const char* what) {
        auto [it, fresh] = table.emplace(key, std::make_pair(value, Witness{i, j}));
        if (!fresh && !(it->second.first == value))
            r.fail(std::string("condition ") + what + ": products " + pair_text(it->second.second.first, it->second.second.second) +
                   " and " + pair_text(i, j) + " disagree");
    };

    const Scalar zero = a.ring().zero();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const auto& c1 = datum.coord(i);
        if (!c1) continue;
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const auto& c2 = datum.coord(j);
            if (!c2) continue;
            ++r.checked;
            auto pr = a.product(i, j);
            if (pr.size() > 1) {
                r.fail("product " + pair_text(i, j) + " has " + std::to_string(pr.size()) + " terms");
                continue;
            }
            auto k2 = std::make_tuple(c1->level, c1->q, c2->level, c2->p);
            if (pr.empty()) {
                check(kappa, k2, zero, i, j, "(2) kappa");
                continue;
            }
            const auto& c = datum.coord(pr[0].index);
            if (!c) continue;
            check(kappa, k2, pr[0].coeff, i, j, "(2) kappa");
            if (c->level > c1->level || c->level > c2->level) r.fail("condition (1): product " + pair_text(i, j) + " rises in level");
            check(lambda, k2, c->level, i, j, "(2) lambda");
            check(sigma, std::make_tuple(c1->level, c1->g, c1->q, c2->level, c2->p, c2->g), c->g, i, j, "(3)");
            check(left, std::make_tuple(c1->level, c1->p, c1->g, c1->q, c2->level, c2->p), std::make_pair(c->level, c->p), i, j,
                  "(4)");
            if (c->level == c2->level) {
                if (c->q != c2->q) r.fail("condition (5): product " + pair_text(i, j) + " changes the right state");
                const auto& lv = datum.level(c->level);
                int s = lv.mul[c->g][lv.inv[c2->g]];
                check(shift, std::make_tuple(c1->level, c1->g, c1->q, c2->level, c2->p), s, i, j, "(5)");
            }
        }
    }
    return r;
}

VerificationReport check_product_formula(const StructureAlgebra& a) {
    VerificationReport r;
    r.name = "product formula " + family_name(a.family()) + "_" + std::to_string(a.n());
    if (!a.has_diagrams()) {
        r.fail("algebra has no diagram basis");
        return r;
    }
    std::vector<Decomposition> dec;
    dec.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) dec.push_back(decompose(a.diagram(i)));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            ++r.checked;
            const auto g = pair_graph(dec[i].q, dec[j].p);
            const auto cat = concat_product(a.diagram(i), a.diagram(j));
            const std::size_t t2 = dec[j].q.defect_count();
            const bool kept = cat.diagram.through_count() == t2;
            if (kept != (g.pair_set_size == t2))
                r.fail("level rule fails for " + a.label(i) + " * " + a.label(j));
            const Scalar want = a.delta().pow(static_cast<unsigned>(g.loop_count));
            auto pr = a.product(i, j);
            if (want.is_zero()) {
                if (!pr.empty()) r.fail("product " + a.label(i) + " * " + a.label(j) + " should vanish");
                continue;
            }
            auto idx = a.index_of(cat.diagram);
            if (pr.size() != 1 || !idx || pr[0].index != *idx || pr[0].coeff != want)
                r.fail("coefficient of " + a.label(i) + " * " + a.label(j) + " is not delta^" + std::to_string(g.loop_count));
        }
    return r;
}

}  // namespace diagcell
