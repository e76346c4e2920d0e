#include "diagcell/verify.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace diagcell;

namespace {

StructureAlgebra make(Family f, std::size_t n, long delta, const Ring& r) {
    return build_algebra(f, n, r.from_int(delta), r);
}

}  // namespace

TEST(Verify, SmallInstancesPass) {
    for (Ring r : {Ring::prime_field(2), Ring::prime_field(5), Ring::rationals()})
        for (long d : {0L, 1L, 2L})
            for (auto f : {Family::brauer, Family::tl, Family::jones})
                for (std::size_t n = 1; n <= 4; ++n) {
                    auto a = make(f, n, d, r);
                    auto datum = CellDatum::build(a);
                    auto w = verify_naive_cellular(a, datum);
                    auto g = verify_diagram_like(a, datum);
                    EXPECT_TRUE(w.passed) << family_name(f) << n << " " << w.to_string();
                    EXPECT_TRUE(g.passed) << family_name(f) << n << " " << g.to_string();
                    EXPECT_GT(w.checked, 0u);
                }
}

TEST(Verify, SpecInstances) {
    Ring f5 = Ring::prime_field(5), f3 = Ring::prime_field(3), q = Ring::rationals();
    {
        auto a = make(Family::brauer, 3, 2, f5);
        EXPECT_TRUE(verify_naive_cellular(a, CellDatum::build(a)).passed);
    }
    {
        auto a = make(Family::tl, 4, 0, q);
        EXPECT_TRUE(verify_naive_cellular(a, CellDatum::build(a)).passed);
    }
    {
        auto a = make(Family::jones, 5, 1, f3);
        EXPECT_TRUE(verify_diagram_like(a, CellDatum::build(a)).passed);
    }
}

TEST(Verify, MutatedTableFails) {
    auto a = make(Family::tl, 3, 2, Ring::prime_field(5));
    // swap one product for a different basis element
    auto prod = a.product(1, 2);
    ASSERT_EQ(prod.size(), 1u);
    std::uint32_t other = prod[0].index == 0 ? 1 : 0;
    auto bad = a.with_product(1, 2, {{other, prod[0].coeff}});
    auto datum = CellDatum::build(bad);
    auto w = verify_naive_cellular(bad, datum);
    auto g = verify_diagram_like(bad, datum);
    EXPECT_FALSE(w.passed && g.passed);
    EXPECT_FALSE((w.certificates.size() + g.certificates.size()) == 0);
}

TEST(Verify, TwoTermProductFailsDiagramLike) {
    auto a = make(Family::brauer, 2, 1, Ring::rationals());
    auto prod = a.product(1, 1);
    ASSERT_EQ(prod.size(), 1u);
    auto bad = a.with_product(1, 1, {prod[0], {2, a.ring().one()}});
    EXPECT_FALSE(verify_diagram_like(bad, CellDatum::build(bad)).passed);
}

TEST(Verify, ProductFormulaBrauerFour) {
    for (long d : {0L, 2L}) {
        auto a = make(Family::brauer, 4, d, Ring::rationals());
        auto rep = check_product_formula(a);
        EXPECT_TRUE(rep.passed) << rep.to_string();
        EXPECT_EQ(rep.checked, a.dim() * a.dim());
    }
}

TEST(Verify, LevelDropCriterionAgainstOracle) {
    // the product keeps t2 through-strands exactly when the pair set has t2 components
    for (std::size_t n = 1; n <= 4; ++n) {
        auto all = enumerate_brauer_diagrams(n);
        for (const auto& a : all)
            for (const auto& b : all) {
                auto q1 = decompose(a).q, p2 = decompose(b).p;
                auto pg = oracle::pair_graph(q1.partners(), p2.partners());
                auto prod = oracle::concat(a.partners(), b.partners());
                std::size_t through = 0;
                for (std::size_t i = 0; i < n; ++i) through += prod.partner[i] >= static_cast<int>(n);
                std::size_t t2 = b.through_count();
                ASSERT_EQ(through == t2, pg.pair_set == t2);
            }
    }
}

TEST(Verify, ReportFormatting) {
    VerificationReport r;
    r.name = "x";
    for (int i = 0; i < 40; ++i) r.fail("c" + std::to_string(i));
    EXPECT_FALSE(r.passed);
    EXPECT_EQ(r.certificates.size(), VerificationReport::max_certificates);
    VerificationReport ok;
    ok.merge(r);
    EXPECT_FALSE(ok.passed);
}
