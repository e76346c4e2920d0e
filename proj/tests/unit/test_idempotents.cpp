#include "diagcell/idempotents.hpp"
#include "diagcell/link_order.hpp"
#include "diagcell/matrix.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace diagcell;

namespace {

StructureAlgebra make(Family f, std::size_t n, long delta, const Ring& r) {
    return build_algebra(f, n, r.from_int(delta), r);
}

std::vector<LinkState> planar_states(std::size_t n) {
    std::vector<LinkState> out;
    for (std::size_t t = n % 2; t <= n; t += 2)
        for (auto& s : enumerate_link_states(n, t, StateFamily::planar)) out.push_back(s);
    return out;
}

// Rank of the span of the given elements, as coefficient rows.
std::size_t span_rank(const StructureAlgebra& a, const std::vector<AlgebraElement>& xs) {
    if (xs.empty()) return 0;
    Matrix m(a.ring(), xs.size(), a.dim());
    for (std::size_t r = 0; r < xs.size(); ++r)
        for (const auto& [i, c] : xs[r].terms()) m(r, i) = c;
    return rank(m);
}

std::vector<AlgebraElement> left_multiples(const AlgebraElement& e) {
    std::vector<AlgebraElement> out;
    for (std::size_t y = 0; y < e.owner().dim(); ++y) out.push_back(multiply(AlgebraElement::basis(e.owner(), y), e));
    return out;
}

struct QuotientAt {
    StructureAlgebra alg;
    CellDatum datum;
    int li;
};

QuotientAt quotient_at(const StructureAlgebra& a, int t) {
    auto q = quotient_below(a, t);
    auto d = CellDatum::build(q);
    int li = d.level_of_t(t);
    return {std::move(q), std::move(d), li};
}

}  // namespace

TEST(Order, Basics) {
    auto q = LinkState::from_pairs(4, {{1, 2}});
    auto q2 = LinkState::from_pairs(4, {{1, 2}, {3, 4}});
    EXPECT_TRUE(tl_leq(q, q));
    EXPECT_TRUE(tl_leq(q2, q));
    EXPECT_FALSE(tl_leq(q, q2));
    EXPECT_EQ(tl_compare(q2, q), Order::lt);
    EXPECT_EQ(tl_compare(q, q), Order::eq);
    EXPECT_EQ(tl_compare(LinkState::from_pairs(4, {{2, 3}}), q), Order::incomparable);
}

TEST(Order, MeetIsGreatestLowerBound) {
    for (std::size_t n = 1; n <= 6; ++n) {
        auto all = planar_states(n);
        for (const auto& a : all)
            for (const auto& b : all) {
                std::vector<LinkState> lower;
                for (const auto& r : all)
                    if (tl_leq(r, a) && tl_leq(r, b)) lower.push_back(r);
                std::optional<LinkState> glb;
                for (const auto& r : lower) {
                    bool top = true;
                    for (const auto& s : lower) top = top && tl_leq(s, r);
                    if (top) glb = r;
                }
                if (!lower.empty()) ASSERT_TRUE(glb.has_value());
                ASSERT_EQ(tl_meet(a, b), glb) << a.to_string() << " / " << b.to_string();
            }
    }
}

TEST(Order, DefectCountStrictlyMonotone) {
    for (std::size_t n = 1; n <= 6; ++n) {
        auto all = planar_states(n);
        for (const auto& a : all)
            for (const auto& b : all)
                if (tl_compare(a, b) == Order::lt) ASSERT_LT(a.defect_count(), b.defect_count());
    }
}

TEST(Order, IdealIntersectionIsIdealOfMeet) {
    for (std::size_t n = 1; n <= 5; ++n) {
        auto a = make(Family::tl, n, 0, Ring::prime_field(2));
        auto all = planar_states(n);
        for (const auto& p : all)
            for (const auto& q : all) {
                auto both = intersect(ideal_J_leq(a, p, tl_leq), ideal_J_leq(a, q, tl_leq));
                auto m = tl_meet(p, q);
                if (m) EXPECT_EQ(both, ideal_J_leq(a, *m, tl_leq));
                else EXPECT_EQ(both.size(), 0u);
            }
    }
}

TEST(Factorize, ElevenPointExample) {
    auto p = LinkState::from_pairs(11, {{1, 2}, {3, 4}, {6, 9}, {7, 8}, {10, 11}});
    auto qp = LinkState::from_pairs(11, {{2, 3}, {5, 6}, {8, 9}, {7, 10}, {4, 11}});
    auto q = LinkState::from_pairs(11, {{2, 3}, {5, 6}, {8, 9}});
    ASSERT_TRUE(tl_leq(qp, q));
    auto d = assemble(p, Permutation::identity(1), qp);
    auto [left, right] = tl_factorize(d, q);
    auto c = concat_product(left, right);
    EXPECT_EQ(c.loops, 0u);
    EXPECT_EQ(c.diagram, d);
    EXPECT_EQ(decompose(right).q, q);
    EXPECT_TRUE(decompose(left).p.is_planar());
}

TEST(Factorize, ExhaustiveSmall) {
    for (std::size_t n = 1; n <= 6; ++n) {
        auto a = make(Family::tl, n, 0, Ring::prime_field(2));
        auto states = planar_states(n);
        std::size_t cases = 0;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            const auto& d = a.diagram(i);
            auto qd = decompose(d).q;
            for (const auto& q : states) {
                if (q.defect_count() == 0 || tl_compare(qd, q) != Order::lt) continue;
                auto [left, right] = tl_factorize(d, q);
                auto c = concat_product(left, right);
                ASSERT_EQ(c.loops, 0u);
                ASSERT_EQ(c.diagram, d);
                ASSERT_EQ(decompose(right).q, q);
                ASSERT_TRUE(a.index_of(left).has_value());
                ASSERT_TRUE(a.index_of(right).has_value());
                ++cases;
            }
        }
        if (n >= 3) EXPECT_GT(cases, 0u);
    }
}

TEST(Solve, TemperleyLiebTwo) {
    Ring f5 = Ring::prime_field(5);
    {
        auto a = make(Family::tl, 2, 0, f5);
        auto qa = quotient_at(a, 0);
        EXPECT_FALSE(solve_idempotent(qa.alg, qa.datum, qa.li, 0).has_value());
    }
    {
        auto a = make(Family::tl, 2, 2, f5);
        auto qa = quotient_at(a, 0);
        auto e = solve_idempotent(qa.alg, qa.datum, qa.li, 0);
        ASSERT_TRUE(e.has_value());
        auto u = *qa.alg.index_of(parse_diagram("n=2; [1 2][1' 2']"));
        EXPECT_EQ(*e, AlgebraElement::basis(qa.alg, u).scaled(f5.from_int(2).inverse()));
        EXPECT_TRUE(is_idempotent(*e));
    }
}

TEST(Solve, TemperleyLiebAllPositiveLevels) {
    for (std::size_t n = 1; n <= 5; ++n)
        for (long delta : {0L, 1L, 2L}) {
            auto a = make(Family::tl, n, delta, Ring::prime_field(3));
            for (int t : a.levels()) {
                if (t == 0) continue;
                auto qa = quotient_at(a, t);
                for (int q = 0; q < static_cast<int>(qa.datum.level(qa.li).states.size()); ++q) {
                    auto e = solve_idempotent(qa.alg, qa.datum, qa.li, q);
                    ASSERT_TRUE(e.has_value());
                    EXPECT_TRUE(is_idempotent(*e));
                    EXPECT_TRUE(fixes_ideal(*e, ideal_J(qa.alg, qa.datum.level(qa.li).states[q])));
                }
            }
        }
}

TEST(Solve, EzAgreesWithSolveOnGeneratedIdeal) {
    for (std::size_t n = 2; n <= 5; ++n)
        for (auto f : {Family::tl, Family::jones}) {
            auto a = make(f, n, 0, Ring::prime_field(5));
            for (int t : a.levels()) {
                if (t == 0) continue;
                auto qa = quotient_at(a, t);
                const auto& lv = qa.datum.level(qa.li);
                for (int q = 0; q < static_cast<int>(lv.states.size()); ++q) {
                    auto partner = f == Family::tl ? greedy_partner(lv.states[q]) : rotate(lv.states[q]);
                    int p = lv.find_state(partner);
                    auto ez = ez_idempotent(qa.alg, qa.datum, qa.li, q, p);
                    auto sv = solve_idempotent(qa.alg, qa.datum, qa.li, q);
                    ASSERT_TRUE(sv.has_value());
                    EXPECT_TRUE(is_idempotent(ez));
                    auto xs = left_multiples(ez), ys = left_multiples(*sv);
                    auto r1 = span_rank(qa.alg, xs), r2 = span_rank(qa.alg, ys);
                    auto both = xs;
                    both.insert(both.end(), ys.begin(), ys.end());
                    EXPECT_EQ(r1, r2);
                    EXPECT_EQ(span_rank(qa.alg, both), r1);
                    EXPECT_EQ(r1, ideal_J(qa.alg, lv.states[q]).size());
                }
            }
        }
}

TEST(Solve, EzRejectsBadWitness) {
    auto a = make(Family::tl, 4, 0, Ring::prime_field(5));
    auto qa = quotient_at(a, 0);
    // at t = 0 every form value is a positive power of delta = 0
    EXPECT_ANY_THROW(ez_idempotent(qa.alg, qa.datum, qa.li, 0, 0));
}

TEST(Lift, TemperleyLiebSmall) {
    for (std::size_t n = 1; n <= 5; ++n)
        for (Ring r : {Ring::prime_field(5), Ring::rationals()})
            for (long delta : {0L, 1L}) {
                auto a = make(Family::tl, n, delta, r);
                auto datum = CellDatum::build(a);
                for (int t : a.levels()) {
                    if (t == 0) continue;
                    auto qa = quotient_at(a, t);
                    int li = datum.level_of_t(t);
                    for (int q = 0; q < static_cast<int>(datum.level(li).states.size()); ++q) {
                        const auto& qs = datum.level(li).states[q];
                        auto eps = solve_idempotent(qa.alg, qa.datum, qa.li, qa.datum.level(qa.li).find_state(qs));
                        ASSERT_TRUE(eps.has_value());
                        auto lift = lift_idempotent(a, datum, li, q, *eps, tl_leq);
                        EXPECT_TRUE(lift.ok()) << qs.to_string() << " " << lift.problem;
                        EXPECT_EQ(lift.span_rank, lift.target_dim);
                        EXPECT_EQ(lift.target_dim, ideal_J_leq(a, qs, tl_leq).size());
                        // independent recheck of e^2 = e and A e = J_{<=q}
                        EXPECT_EQ(multiply(lift.e, lift.e), lift.e);
                        auto ae = left_multiples(lift.e);
                        EXPECT_EQ(span_rank(a, ae), lift.target_dim);
                        auto target = ideal_J_leq(a, qs, tl_leq);
                        for (const auto& x : ae)
                            for (const auto& [i, c] : x.terms()) EXPECT_TRUE(target.contains(i));
                    }
                }
            }
}

TEST(Lift, TopStateGivesUnit) {
    auto a = make(Family::tl, 4, 0, Ring::prime_field(5));
    auto datum = CellDatum::build(a);
    int li = datum.level_of_t(4);
    auto qa = quotient_at(a, 4);
    auto eps = solve_idempotent(qa.alg, qa.datum, qa.li, 0);
    ASSERT_TRUE(eps.has_value());
    auto lift = lift_idempotent(a, datum, li, 0, *eps, tl_leq);
    EXPECT_TRUE(lift.ok());
    EXPECT_EQ(lift.e, AlgebraElement::unit(a));
    EXPECT_EQ(lift.target_dim, a.dim());
}

TEST(Lift, InjectedNonIdempotentIsReported) {
    Ring f5 = Ring::prime_field(5);
    auto a = make(Family::tl, 4, 0, f5);
    auto datum = CellDatum::build(a);
    int li = datum.level_of_t(2);
    auto qa = quotient_at(a, 2);
    auto eps = solve_idempotent(qa.alg, qa.datum, qa.li, 0);
    ASSERT_TRUE(eps.has_value());
    auto lift = lift_idempotent(a, datum, li, 0, eps->scaled(f5.from_int(2)), tl_leq);
    EXPECT_FALSE(lift.idempotent);
    EXPECT_FALSE(lift.ok());
}

TEST(Lift, StaySetContainsGreedyPartner) {
    auto a = make(Family::tl, 5, 0, Ring::prime_field(2));
    auto datum = CellDatum::build(a);
    for (int li = 0; li < static_cast<int>(datum.levels().size()); ++li) {
        const auto& lv = datum.level(li);
        if (lv.t == 0) continue;
        for (int q = 0; q < static_cast<int>(lv.states.size()); ++q) {
            auto s = stay_set(a, datum, li, q);
            int p = lv.find_state(greedy_partner(lv.states[q]));
            EXPECT_NE(std::find(s.begin(), s.end(), p), s.end());
        }
    }
}
