#include "diagcell/forms.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace diagcell;

namespace {

StructureAlgebra make(Family f, std::size_t n, long delta, const Ring& r) {
    return build_algebra(f, n, r.from_int(delta), r);
}

// Coefficient of C_{p1,q2}^{g} in x * y.
Scalar coeff_at(const StructureAlgebra& a, const CellDatum& d, std::size_t x, std::size_t y, CellCoord want) {
    for (const auto& t : a.product(x, y))
        if (d.coord(t.index) == want) return t.coeff;
    return a.ring().zero();
}

}  // namespace

TEST(Forms, TemperleyLiebThreeHandTable) {
    Ring q = Ring::rationals();
    for (long delta : {0L, 1L, 2L, 5L}) {
        auto a = make(Family::tl, 3, delta, q);
        auto d = CellDatum::build(a);
        int li = d.level_of_t(1);
        auto g = gram_table(a, d, li);
        ASSERT_EQ(g.value.size(), 2u);
        // each state against itself closes one loop; the two different states meet in one strand
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) EXPECT_EQ(g.value[x][y][0], q.from_int(x == y ? delta : 1));
    }
}

TEST(Forms, GramCsvShape) {
    Ring f5 = Ring::prime_field(5);
    auto a = make(Family::tl, 3, 2, f5);
    auto d = CellDatum::build(a);
    auto csv = gram_table(a, d, d.level_of_t(1)).to_csv(d);
    EXPECT_NE(csv.find("2 mod 5"), std::string::npos);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

TEST(Forms, Symmetry) {
    for (auto f : {Family::brauer, Family::jones, Family::tl}) {
        auto a = make(f, 4, 3, Ring::rationals());
        auto d = CellDatum::build(a);
        for (int li = 0; li < static_cast<int>(d.levels().size()); ++li) {
            const auto& lv = d.level(li);
            auto g = gram_table(a, d, li);
            for (std::size_t q = 0; q < lv.states.size(); ++q)
                for (std::size_t p = 0; p < lv.states.size(); ++p)
                    for (std::size_t tau = 0; tau < lv.group.size(); ++tau)
                        EXPECT_EQ(g.value[q][p][tau], g.value[p][q][lv.inv[tau]]);
        }
    }
}

TEST(Forms, IndependentOfAuxiliaryStates) {
    for (auto f : {Family::brauer, Family::jones, Family::tl}) {
        auto a = make(f, 4, 2, Ring::prime_field(5));
        auto d = CellDatum::build(a);
        for (int li = 0; li < static_cast<int>(d.levels().size()); ++li) {
            const int m = static_cast<int>(d.level(li).states.size());
            const int k = static_cast<int>(d.level(li).group.size());
            for (int q = 0; q < m; ++q)
                for (int p = 0; p < m; ++p)
                    for (int tau = 0; tau < k; ++tau) {
                        auto ref = bilinear_form(a, d, li, q, p, tau);
                        for (int p1 = 0; p1 < m; ++p1)
                            for (int q2 = 0; q2 < m; ++q2)
                                ASSERT_EQ(bilinear_form(a, d, li, q, p, tau, p1, q2), ref);
                    }
        }
    }
}

TEST(Forms, Equivariance) {
    auto a = make(Family::brauer, 4, 2, Ring::rationals());
    auto d = CellDatum::build(a);
    for (int li = 0; li < static_cast<int>(d.levels().size()); ++li) {
        const auto& lv = d.level(li);
        const int m = static_cast<int>(lv.states.size());
        const int k = static_cast<int>(lv.group.size());
        auto g = gram_table(a, d, li);
        for (int q = 0; q < m; ++q)
            for (int p = 0; p < m; ++p)
                for (int s1 = 0; s1 < k; ++s1)
                    for (int s2 = 0; s2 < k; ++s2) {
                        auto x = static_cast<std::size_t>(d.basis_index(li, 0, s1, q));
                        auto y = static_cast<std::size_t>(d.basis_index(li, p, s2, 0));
                        for (int tau = 0; tau < k; ++tau) {
                            int gg = lv.mul[lv.mul[s1][tau]][s2];
                            ASSERT_EQ(coeff_at(a, d, x, y, CellCoord{li, 0, gg, 0}), g.value[q][p][tau]);
                        }
                    }
    }
}

TEST(Forms, CorollaryIdentityInQuotients) {
    // s(s1, q1, p2, g s2^-1) = s(s2^-1, p2, q1, g^-1 s1) in A / I_{<t}
    auto a = make(Family::brauer, 4, 3, Ring::rationals());
    for (int t : a.levels()) {
        auto qa = quotient_below(a, t);
        auto d = CellDatum::build(qa);
        int li = d.level_of_t(t);
        ASSERT_EQ(li, 0);
        const auto& lv = d.level(li);
        const int m = static_cast<int>(lv.states.size());
        const int k = static_cast<int>(lv.group.size());
        for (int q1 = 0; q1 < m; ++q1)
            for (int p2 = 0; p2 < m; ++p2)
                for (int s1 = 0; s1 < k; ++s1)
                    for (int s2 = 0; s2 < k; ++s2)
                        for (int g = 0; g < k; ++g) {
                            auto lhs = s_function(qa, d, li, s1, q1, p2, lv.mul[g][lv.inv[s2]]);
                            auto rhs = s_function(qa, d, li, lv.inv[s2], p2, q1, lv.mul[lv.inv[g]][s1]);
                            ASSERT_EQ(lhs, rhs);
                        }
    }
}

TEST(Forms, ClosedFormAgainstPairGraphOracle) {
    Ring q = Ring::rationals();
    Scalar delta = q.from_int(3);
    auto a = build_algebra(Family::brauer, 4, delta, q);
    auto d = CellDatum::build(a);
    for (int li = 0; li < static_cast<int>(d.levels().size()); ++li) {
        const auto& lv = d.level(li);
        auto g = gram_table(a, d, li);
        for (std::size_t x = 0; x < lv.states.size(); ++x)
            for (std::size_t y = 0; y < lv.states.size(); ++y) {
                auto pg = oracle::pair_graph(lv.states[x].partners(), lv.states[y].partners());
                std::size_t nonzero = 0;
                for (const auto& v : g.value[x][y])
                    if (!v.is_zero()) {
                        ++nonzero;
                        EXPECT_EQ(v, delta.pow(static_cast<unsigned>(pg.loops)));
                    }
                EXPECT_EQ(nonzero, pg.pair_set == static_cast<std::size_t>(lv.t) ? 1u : 0u);
            }
    }
}

TEST(Forms, ClosedFormChecker) {
    for (auto f : {Family::brauer, Family::tl, Family::jones}) {
        auto a = make(f, 4, 0, Ring::prime_field(2));
        auto rep = check_form_closed_form(a, CellDatum::build(a));
        EXPECT_TRUE(rep.passed) << rep.to_string();
    }
    auto a = make(Family::brauer, 3, 2, Ring::rationals());
    auto d = CellDatum::build(a);
    auto bad = a.with_product(0, 0, {{0, a.ring().from_int(2)}});
    EXPECT_FALSE(check_form_closed_form(bad, CellDatum::build(bad)).passed);
}

TEST(Forms, GreedyPartnerGivesUnitForm) {
    for (std::size_t n = 2; n <= 6; ++n) {
        auto a = make(Family::tl, n, 0, Ring::prime_field(3));
        auto d = CellDatum::build(a);
        for (int li = 0; li < static_cast<int>(d.levels().size()); ++li) {
            const auto& lv = d.level(li);
            if (lv.t == 0) continue;
            for (std::size_t q = 0; q < lv.states.size(); ++q) {
                int p = lv.find_state(greedy_partner(lv.states[q]));
                ASSERT_GE(p, 0);
                EXPECT_EQ(bilinear_form(a, d, li, static_cast<int>(q), p, 0), a.ring().one());
            }
        }
    }
}

TEST(Forms, RotationPartnerGivesSingleCyclicIndicator) {
    for (std::size_t n = 2; n <= 5; ++n) {
        auto a = make(Family::jones, n, 0, Ring::prime_field(5));
        auto d = CellDatum::build(a);
        for (int li = 0; li < static_cast<int>(d.levels().size()); ++li) {
            const auto& lv = d.level(li);
            if (lv.t == 0) continue;
            auto g = gram_table(a, d, li);
            for (std::size_t q = 0; q < lv.states.size(); ++q) {
                int p = lv.find_state(rotate(lv.states[q]));
                ASSERT_GE(p, 0);
                std::size_t ones = 0, zeros = 0;
                for (const auto& v : g.value[q][p]) {
                    ones += v.is_one();
                    zeros += v.is_zero();
                }
                EXPECT_EQ(ones, 1u);
                EXPECT_EQ(ones + zeros, lv.group.size());
            }
        }
    }
}

TEST(Forms, LinkModuleIsRepresentation) {
    for (auto [f, n] : {std::pair{Family::tl, std::size_t{4}}, std::pair{Family::jones, std::size_t{4}}}) {
        auto a = make(f, n, 2, Ring::prime_field(5));
        auto d = CellDatum::build(a);
        for (int li = 0; li < static_cast<int>(d.levels().size()); ++li) {
            std::size_t m = d.level(li).states.size();
            EXPECT_EQ(link_module_matrix(a, d, AlgebraElement::unit(a), li), Matrix::identity(a.ring(), m));
            std::vector<Matrix> mats;
            for (std::size_t i = 0; i < a.dim(); ++i)
                mats.push_back(link_module_matrix(a, d, AlgebraElement::basis(a, i), li));
            for (std::size_t i = 0; i < a.dim(); ++i)
                for (std::size_t j = 0; j < a.dim(); ++j) {
                    auto ab = multiply(AlgebraElement::basis(a, i), AlgebraElement::basis(a, j));
                    ASSERT_EQ(link_module_matrix(a, d, ab, li), mats[i] * mats[j]);
                }
        }
    }
}

TEST(Forms, LinkModuleJonesFive) {
    auto a = make(Family::jones, 5, 0, Ring::prime_field(5));
    auto d = CellDatum::build(a);
    int li = d.level_of_t(3);
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < a.dim(); ++i) mats.push_back(link_module_matrix(a, d, AlgebraElement::basis(a, i), li));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            auto ab = multiply(AlgebraElement::basis(a, i), AlgebraElement::basis(a, j));
            ASSERT_EQ(link_module_matrix(a, d, ab, li), mats[i] * mats[j]);
        }
}

TEST(Dagger, JonesAndTemperleyLieb) {
    for (std::size_t n = 2; n <= 6; ++n) {
        Ring f3 = Ring::prime_field(3);
        auto jd = CellDatum::for_family(Family::jones, n);
        for (int t = 1; t < static_cast<int>(n); ++t) {
            if ((n - t) % 2) continue;
            auto r = check_hypothesis_dagger(jd, f3.zero(), t);
            EXPECT_TRUE(r.holds) << "J" << n << " t=" << t;
            for (auto l : r.loops) EXPECT_EQ(l, 0u);
        }
        if (n % 2 == 0) {
            EXPECT_TRUE(check_hypothesis_dagger(jd, f3.from_int(2), 0).holds);
            EXPECT_FALSE(check_hypothesis_dagger(jd, f3.zero(), 0).holds);
            auto td = CellDatum::for_family(Family::tl, n);
            EXPECT_FALSE(check_hypothesis_dagger(td, f3.zero(), 0).holds);
            EXPECT_TRUE(check_hypothesis_dagger(td, f3.one(), 0).holds);
        }
    }
}

TEST(Dagger, AlgebraOverloadAgrees) {
    for (long delta : {0L, 1L}) {
        auto a = make(Family::tl, 4, delta, Ring::prime_field(5));
        auto d = CellDatum::build(a);
        for (int t : {0, 2, 4})
            EXPECT_EQ(check_hypothesis_dagger(a, d, t).holds, check_hypothesis_dagger(d, a.delta(), t).holds);
    }
}
