#include <random>

#include <gtest/gtest.h>

#include "cerf/error.hpp"
#include "cerf/surface.hpp"
#include "oracles.hpp"
#include "printing.hpp"

using namespace cerf;

namespace {

HomologyClass random_class(std::size_t rank, std::mt19937_64& rng) {
    std::vector<Integer> v(rank);
    for (auto& x : v) x = std::uniform_int_distribution<int>(-5, 5)(rng);
    return HomologyClass(v);
}

} // namespace

TEST(Pairing, BasisValues) {
    const SymplecticLattice l(2);
    EXPECT_EQ(intersection_pairing(l.a(0), l.b(0), l), 1);
    EXPECT_EQ(intersection_pairing(l.b(0), l.a(0), l), -1);
    EXPECT_EQ(intersection_pairing(l.a(0), l.a(1), l), 0);
    EXPECT_EQ(intersection_pairing(l.a(0) + l.b(1), l.b(0) + l.a(1), l), 0);
    EXPECT_THROW(intersection_pairing(l.a(0), SymplecticLattice(1).a(0), l), Error);
}

TEST(Pairing, AntisymmetricAndBilinear) {
    std::mt19937_64 rng(21);
    for (int g = 1; g <= 4; ++g) {
        const SymplecticLattice l(g);
        for (int t = 0; t < 200; ++t) {
            const auto x = random_class(l.rank(), rng), y = random_class(l.rank(), rng), z = random_class(l.rank(), rng);
            EXPECT_EQ(intersection_pairing(x, y, l), -intersection_pairing(y, x, l));
            EXPECT_EQ(intersection_pairing(x + z, y, l), intersection_pairing(x, y, l) + intersection_pairing(z, y, l));
            EXPECT_EQ(intersection_pairing(x, x, l), 0);
        }
    }
}

TEST(Labels, Readable) {
    const SymplecticLattice l(2);
    EXPECT_EQ((l.a(0) + 2 * l.b(1)).label(), "a1+2b2");
    EXPECT_EQ((-l.b(0)).label(), "-b1");
}

TEST(ValidateCutSystem, Examples) {
    const SymplecticLattice l(2);
    EXPECT_TRUE(validate_cut_system(standard_cut_system(l), l).ok());
    EXPECT_TRUE(validate_cut_system(CutSystem{{l.a(0) + l.a(1), l.a(1)}, {}}, l).ok());

    const auto dup = validate_cut_system(CutSystem{{l.a(0), l.a(0)}, {}}, l);
    EXPECT_TRUE(dup.has("RANK_DEFICIENT"));
    EXPECT_TRUE(validate_cut_system(CutSystem{{l.a(0), l.b(0)}, {}}, l).has("NOT_ISOTROPIC"));
    EXPECT_TRUE(validate_cut_system(CutSystem{{2 * l.a(0), l.a(1)}, {}}, l).has("NOT_SATURATED"));
    EXPECT_TRUE(validate_cut_system(CutSystem{{l.a(0)}, {}}, l).has("WRONG_CURVE_COUNT"));
}

TEST(Slide, Examples) {
    const SymplecticLattice l(2);
    const auto cs = standard_cut_system(l);
    const auto s = slide(cs, 0, 1, +1, l);
    EXPECT_EQ(s.curves[0], l.a(0) + l.a(1));
    EXPECT_EQ(s.curves[1], l.a(1));
    EXPECT_EQ(slide(s, 0, 1, -1, l).curves, cs.curves);
    EXPECT_THROW(slide(cs, 1, 1, 1, l), Error);
    EXPECT_THROW(slide(cs, 0, 5, 1, l), Error);
    EXPECT_THROW(slide(cs, 0, 1, 2, l), Error);
}

TEST(Span, EqualityAndDistinctness) {
    const SymplecticLattice l2(2), l1(1);
    EXPECT_EQ(lagrangian_span(standard_cut_system(l2), l2), lagrangian_span(CutSystem{{l2.a(0) + l2.a(1), l2.a(1)}, {}}, l2));
    EXPECT_NE(lagrangian_span(CutSystem{{l1.a(0)}, {}}, l1), lagrangian_span(CutSystem{{l1.b(0)}, {}}, l1));
    EXPECT_THROW(lagrangian_span(CutSystem{{l2.a(0), l2.a(0)}, {}}, l2), Error);
}

TEST(Span, RandomSlideSequencesKeepSpan) {
    std::mt19937_64 rng(22);
    for (int seq = 0; seq < 100; ++seq) {
        const int g = 1 + seq % 4;
        const SymplecticLattice l(g);
        // start from a random Lagrangian basis, not only the standard one
        const auto start = oracle::rows_to_cut_system(
            oracle::random_symplectic_image(standard_cut_system(l).matrix(l.rank()), l, seq % 5, rng));
        const auto span = lagrangian_span(start, l);
        auto cs = start;
        for (int step = 0; step < 20 && g > 1; ++step) {
            const std::size_t i = rng() % g;
            std::size_t j = rng() % g;
            if (i == j) j = (j + 1) % g;
            cs = slide(cs, i, j, rng() % 2 ? 1 : -1, l);
            ASSERT_TRUE(validate_cut_system(cs, l).ok());
            ASSERT_EQ(lagrangian_span(cs, l), span);
        }
    }
}

TEST(Span, ContainsAndCoordinates) {
    const SymplecticLattice l(2);
    const CutSystem cs{{l.a(0) + l.a(1), l.a(1)}, {}};
    const auto span = lagrangian_span(cs, l);
    EXPECT_TRUE(span.contains(l.a(0)));
    EXPECT_FALSE(span.contains(l.b(0)));
    const auto c = coordinates_in(cs, l.a(0), l);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(*c, (std::vector<Integer>{1, -1}));
    EXPECT_FALSE(coordinates_in(cs, l.b(1), l).has_value());
}
