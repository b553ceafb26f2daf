#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "romik/markoff.hpp"

#include <set>

using namespace romik;

TEST_CASE("the Markoff equation") {
    CHECK(is_markoff(1, 1, 1));
    CHECK(is_markoff(65, 11, 3));
    CHECK_FALSE(is_markoff(2, 1, 1));
    CHECK_THROWS_AS(MarkoffTriple(2, 1, 1), invalid_triple_error);
}

TEST_CASE("neighbours and tree children") {
    auto nb = markoff_neighbors(MarkoffTriple::root());
    CHECK(nb[0] == MarkoffTriple(5, 3, 1));
    CHECK(nb[1] == MarkoffTriple(1, 1, 1));
    CHECK(nb[2] == MarkoffTriple(1, 11, 3));

    auto ch = markoff_children(MarkoffTriple(5, 3, 1), MarkoffTriple::root());
    REQUIRE(ch.size() == 2);
    CHECK(ch[0] == MarkoffTriple(5, 17, 1));
    CHECK(ch[1] == MarkoffTriple(5, 3, 59));

    // the singular triple regenerates itself and reaches only (1;3,1)
    auto chs = markoff_children(MarkoffTriple::singular(), MarkoffTriple::singular());
    std::set<MarkoffTriple> uniq(chs.begin(), chs.end());
    CHECK(uniq == std::set<MarkoffTriple>{MarkoffTriple::root()});
}

TEST_CASE("tree levels") {
    auto levels = enumerate_markoff(0);
    REQUIRE(levels.size() == 1);
    CHECK(levels[0] == std::vector<MarkoffTriple>{MarkoffTriple::root()});

    auto l2 = enumerate_markoff(2);
    std::size_t total = 0;
    for (const auto& level : l2) total += level.size();
    CHECK(total == 7);
    auto l3 = enumerate_markoff(3);
    std::set<MarkoffTriple> all;
    for (const auto& level : l3)
        for (const auto& t : level) all.insert(t);
    CHECK(all.count(MarkoffTriple(29, 17, 1)) == 1);
    CHECK(all.count(MarkoffTriple(349, 3, 59)) == 1);
    CHECK(all.count(MarkoffTriple(65, 769, 3)) == 1);
    CHECK(all.count(MarkoffTriple(901, 41, 11)) == 1);
    CHECK(all.count(MarkoffTriple(1, 41, 153)) == 1);
}

TEST_CASE("the x and y sets") {
    auto [xs, ys] = markoff_sets(6);
    std::vector<Int> xs_prefix(xs.begin(), xs.begin() + 6);
    CHECK(xs_prefix == std::vector<Int>{1, 5, 29, 65, 169, 349});
    std::vector<Int> ys_prefix(ys.begin(), ys.begin() + 6);
    CHECK(ys_prefix == std::vector<Int>{1, 3, 11, 17, 41, 59});
    // 169 enters through (169; 99, 1)
    CHECK(is_markoff(169, 99, 1));
    CHECK(is_markoff(29, 99, 1));
}

TEST_CASE("words map to triples") {
    CHECK(triple_from_christoffel(christoffel(1, 1)) == MarkoffTriple(1, 3, 1));
    CHECK(triple_from_christoffel(christoffel(2, 1)) == MarkoffTriple(5, 3, 1));
    CHECK(triple_from_christoffel(christoffel(1, 2)) == MarkoffTriple(1, 11, 3));
    CHECK_THROWS_AS(triple_from_christoffel(christoffel(1, 0)), trivial_word_error);
}

TEST_CASE("tree correspondence at moderate depth") {
    std::set<MarkoffTriple> from_words, from_tree;
    for (const auto& level : christoffel_tree(5))
        for (const auto& node : level) from_words.insert(triple_from_christoffel(node.word()));
    for (const auto& level : enumerate_markoff(5))
        for (const auto& t : level) from_tree.insert(t);
    CHECK(from_words == from_tree);
    CHECK(from_tree.size() == 63);
}

TEST_CASE("spectrum enumeration") {
    auto one = spectrum_below_2(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].L_squared == Rational(2));
    CHECK(one[0].markoff == 1);
    CHECK(one[0].kind == SpectrumKind::Y);
    CHECK(one[0].word.word == "b");

    auto ten = spectrum_below_2(10);
    REQUIRE(ten.size() == 10);
    CHECK(ten[9].L_squared == Rational(16899, 4225));
    // strictly increasing, below 4, and within 3/m^2 of the accumulation point
    for (std::size_t i = 0; i < ten.size(); ++i) {
        const auto& e = ten[i];
        if (i) CHECK(ten[i - 1].L_squared < e.L_squared);
        CHECK(e.L_squared < Rational(4));
        // L^2 > (2 - 3/m^2)^2, i.e. the values crowd toward 2
        Rational m2(Int(e.markoff * e.markoff));
        Rational lower = (Rational(2) - Rational(3) / m2) * (Rational(2) - Rational(3) / m2);
        CHECK(e.L_squared > lower);
    }
    // x-kind and y-kind values never coincide: 4 - 1/x^2 = 4 - 2/y^2 would
    // force y^2 = 2 x^2.
    std::set<Rational> seen;
    for (const auto& e : spectrum_below_2(25)) {
        CHECK(seen.count(e.L_squared) == 0);
        seen.insert(e.L_squared);
    }
}

TEST_CASE("the near collision in rows 7 and 8") {
    // sqrt(6722)/41 < sqrt(3363)/29 by exactly 1/(1681*841) at the L^2 level
    Rational a(6722, 1681), b(3363, 841);
    CHECK(a < b);
    CHECK(b - a == Rational(1, Int(1681) * 841));
    auto ten = spectrum_below_2(10);
    CHECK(ten[6].L_squared == a);
    CHECK(ten[7].L_squared == b);
}

TEST_CASE("comparison operator orders triples deterministically") {
    CHECK(MarkoffTriple(1, 3, 1) < MarkoffTriple(5, 3, 1));
    std::set<Rational> empty;
    (void)empty;
}
