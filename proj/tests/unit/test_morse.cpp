#include <random>

#include <gtest/gtest.h>

#include "cerf/error.hpp"
#include "cerf/morse.hpp"
#include "random_morse.hpp"

using namespace cerf;

namespace {

SlicedMorseFunction torus() {
    return {{MorseEvent::birth(1, 0), MorseEvent::split(1, 2, 3, 1), MorseEvent::merge(2, 3, 4, 2),
             MorseEvent::death(4, 3)}};
}

} // namespace

TEST(Heights, ParseExact) {
    EXPECT_EQ(parse_height("3/2"), Height(3, 2));
    EXPECT_EQ(parse_height("-4"), Height(-4));
    EXPECT_EQ(height_to_string(Height(6, 4)), "3/2");
    EXPECT_THROW(parse_height("0.5"), Error);
    EXPECT_THROW(parse_height("1/0"), Error);
}

TEST(ValidateSliced, Genus) {
    EXPECT_EQ(validate_sliced(sphere_function()).genus, 0);
    EXPECT_EQ(validate_sliced(torus()).genus, 1);
    EXPECT_EQ(validate_sliced(stacked_function(3)).genus, 3);
}

TEST(ValidateSliced, Errors) {
    auto f = torus();
    f.events[2].in = {2, 9};
    EXPECT_TRUE(validate_sliced(f).report.has("UNKNOWN_CIRCLE"));

    f = torus();
    f.events[2].height = f.events[1].height;
    EXPECT_FALSE(validate_sliced(f).report.ok());

    f = torus();
    f.events.pop_back();
    EXPECT_TRUE(validate_sliced(f).report.has("LIVE_CIRCLES_REMAIN"));

    const SlicedMorseFunction two_spheres{{MorseEvent::birth(1, 0), MorseEvent::death(1, 1), MorseEvent::birth(2, 2),
                                           MorseEvent::death(2, 3)}};
    EXPECT_TRUE(validate_sliced(two_spheres).report.has("DISCONNECTED"));
    EXPECT_TRUE(validate_sliced(SlicedMorseFunction{}).report.has("EMPTY_FUNCTION"));
}

TEST(ReebGraph, Betti) {
    EXPECT_EQ(reeb_graph(sphere_function()).betti, 0);
    EXPECT_EQ(reeb_graph(torus()).betti, 1);
    EXPECT_EQ(reeb_graph(stacked_function(2)).betti, 2);
    const auto degrees = reeb_graph(torus()).degrees();
    EXPECT_EQ(degrees, (std::vector<int>{1, 3, 3, 1}));
}

TEST(CriticalNeighborhood, Profiles) {
    const auto f = torus();
    const auto birth = critical_neighborhood(f, 0);
    EXPECT_EQ(birth.genus, 0);
    EXPECT_EQ(birth.boundary_circles, 1);
    const auto split = critical_neighborhood(f, 1);
    EXPECT_EQ(split.genus, 0);
    EXPECT_EQ(split.boundary_circles, 3);
    EXPECT_EQ(critical_neighborhood(f, 2).boundary_circles, 3);
    EXPECT_THROW(critical_neighborhood(f, 7), Error);
}

TEST(CutSystemFromMorse, StandardExamples) {
    const SymplecticLattice l1(1), l2(2);
    EXPECT_EQ(cut_system_from_morse(torus(), l1, standard_basis_map(l1)).curves, (std::vector<HomologyClass>{l1.a(0)}));
    EXPECT_EQ(cut_system_from_morse(stacked_function(2), l2, standard_basis_map(l2)).curves,
              (std::vector<HomologyClass>{l2.a(0), l2.a(1)}));
    EXPECT_THROW(cut_system_from_morse(torus(), l2, standard_basis_map(l2)), Error);
    EXPECT_THROW(cut_system_from_morse(torus(), l1, BasisMap{l1.b(0), l1.a(0)}), Error);
}

TEST(CutSystemFromMorse, CycleSelectionRules) {
    const auto low = reeb_cycle_circles(torus(), CycleSelection::LowestClosing);
    const auto high = reeb_cycle_circles(torus(), CycleSelection::HighestClosing);
    ASSERT_EQ(low.size(), 1u);
    ASSERT_EQ(high.size(), 1u);
}

// Independent oracles: genus from counting critical points, Reeb Betti equal
// to genus, all critical neighbourhoods planar with the right boundary count.
TEST(RandomMorse, PropertiesAgainstCounting) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 400; ++i) {
        const auto f = oracle::random_morse_function(rng, 30);
        const auto v = validate_sliced(f);
        ASSERT_TRUE(v.report.ok()) << v.report.issues().front().message;
        const int g = oracle::genus_by_counting(f);
        ASSERT_EQ(v.genus, g);
        ASSERT_EQ(reeb_graph(f).betti, g);
        for (std::size_t e = 0; e < f.events.size(); ++e) {
            const auto n = critical_neighborhood(f, e);
            ASSERT_EQ(n.genus, 0);
            ASSERT_EQ(n.boundary_circles, static_cast<int>(f.events[e].in.size() + f.events[e].out.size()));
        }
        const SymplecticLattice l(g);
        const auto cs = cut_system_from_morse(f, l, standard_basis_map(l));
        ASSERT_TRUE(validate_cut_system(cs, l).ok());
    }
}
