#include <doctest.h>

#include <map>
#include <set>

#include "ptchain/tableau.hpp"

using namespace ptchain;

namespace {

PermutationTableau tab(const std::string& key) { return PermutationTableau::parse_key(key); }

// The half-perimeter 17 tableau of shape (10,9,9,8,5,2,0) used as the
// reference for the statistics.
PermutationTableau big_example() {
    return tab("0110010101|111101111|000000000|00000011|00011|11|");
}

long factorial(int n) {
    long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

TEST_CASE("shape of a state") {
    CHECK(shape_of_state(PasepState::parse("0101")) == Shape({2, 1, 0}));
    CHECK(shape_of_state(PasepState::parse("11111")) == Shape({0, 0, 0, 0, 0, 0}));
    CHECK(shape_of_state(PasepState::parse("0000")) == Shape({4}));
    CHECK(shape_of_state(PasepState(std::vector<unsigned char>{})) == Shape({0}));
}

TEST_CASE("state of a shape") {
    CHECK(state_of_shape(Shape({2, 1, 0})) == PasepState::parse("0101"));
    CHECK(state_of_shape(Shape({0, 0})) == PasepState::parse("1"));
    CHECK(state_of_shape(Shape({1, 0})) == PasepState::parse("01"));
    CHECK_THROWS_AS(state_of_shape(Shape({0})), std::invalid_argument);
}

TEST_CASE("shape/state round trip is the identity") {
    for (int n = 1; n <= 10; ++n)
        for (long v = 0; v < (1L << n); ++v) {
            std::vector<unsigned char> sites(n);
            for (int i = 0; i < n; ++i) sites[i] = (v >> i) & 1;
            PasepState s(std::move(sites));
            CHECK(state_of_shape(shape_of_state(s)) == s);
        }
}

TEST_CASE("shape enumeration is complete and ordered") {
    auto shapes = shapes_of_half_perimeter(4);
    REQUIRE(shapes.size() == 8);
    CHECK(shapes.front() == Shape({3}));
    CHECK(shapes.back() == Shape({0, 0, 0, 0}));
    for (std::size_t i = 1; i < shapes.size(); ++i) CHECK(shapes[i] < shapes[i - 1]);
    for (const auto& s : shapes) CHECK(s.half_perimeter() == 4);
}

TEST_CASE("tableau validity") {
    CHECK(tab("1|1").is_valid());
    CHECK_FALSE(tab("01|10").is_valid());  // corner zero with a one above and to the left
    CHECK_FALSE(tab("0").is_valid());      // column without a one
    CHECK(tab("11").is_valid());
    CHECK_THROWS_AS(PermutationTableau(Shape({2, 1}), {{1, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(PermutationTableau::make_checked(Shape({1}), {{0}}), std::invalid_argument);
}

TEST_CASE("tableau statistics") {
    auto big = big_example();
    REQUIRE(big.shape() == Shape({10, 9, 9, 8, 5, 2, 0}));
    REQUIRE(big.is_valid());
    CHECK(big.stats() == TableauStats{9, 5, 3});

    auto t = tab("1100|0010|1111|001");
    REQUIRE(t.is_valid());
    CHECK(t.stats() == TableauStats{4, 2, 1});

    auto empty = PermutationTableau(Shape({0, 0, 0, 0}), {{}, {}, {}, {}});
    CHECK(empty.stats() == TableauStats{0, 0, 3});
}

TEST_CASE("tableau weight") {
    CHECK(big_example().weight() == LaurentMonomial{1, {9, -5, -3}});
    CHECK(tab("1").weight() == LaurentMonomial{1, {0, -1, 0}});
    CHECK(tab("|").weight() == LaurentMonomial{1, {0, 0, -1}});
}

TEST_CASE("cell classification") {
    auto t = tab("1100|0010|1111|001");
    CHECK(t.is_topmost_one(1, 1));
    CHECK_FALSE(t.is_topmost_one(3, 1));
    CHECK(t.is_topmost_one(2, 3));
    CHECK_FALSE(t.is_necessary_one(2, 3));  // column 3 has ones in rows 2, 3 and 4
    CHECK(t.is_necessary_one(3, 4));
    CHECK(t.is_restricted_zero(2, 1));
    CHECK_FALSE(t.is_restricted_zero(1, 3));
    CHECK(t.row_is_unrestricted(1));
    CHECK_FALSE(t.row_is_unrestricted(2));
    CHECK(t.row_is_unrestricted(3));
}

TEST_CASE("enumeration counts are factorials") {
    CHECK(enumerate_tableaux(1).size() == 1);
    CHECK(enumerate_tableaux(2).size() == 2);
    CHECK(enumerate_tableaux(3).size() == 6);
    auto t4 = enumerate_tableaux(4);
    CHECK(t4.size() == 24);
    for (int n = 5; n <= 7; ++n)
        CHECK(enumerate_tableaux(n).size() == static_cast<std::size_t>(factorial(n)));

    // group sizes by shape for half-perimeter 4
    std::map<std::string, int> by_shape;
    for (const auto& t : t4) ++by_shape[t.shape().to_string()];
    std::multiset<int> sizes;
    for (const auto& [shape, count] : by_shape) sizes.insert(count);
    CHECK(sizes == std::multiset<int>{1, 1, 1, 1, 3, 3, 7, 7});
}

TEST_CASE("enumeration is duplicate-free and within bounds") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> keys;
        for (const auto& t : enumerate_tableaux(n)) {
            CHECK(t.is_valid());
            CHECK(keys.insert(t.key()).second);
            auto s = t.stats();
            CHECK(s.rank >= 0);
            CHECK(s.first_row_ones >= 0);
            CHECK(s.first_row_ones <= t.shape().column_count());
            CHECK(s.free_rows >= 0);
            CHECK(s.free_rows <= t.shape().row_count() - 1);
        }
    }
}

TEST_CASE("shape weight polynomials") {
    // (1,1): three fillings [1][1], [1][0], [0][1]
    LaurentPoly f11 = shape_weight_polynomial(Shape({1, 1}));
    LaurentPoly expect = LaurentPoly(LaurentMonomial{1, {1, -1, -1}}) +
                         LaurentPoly(LaurentMonomial{1, {0, -1, 0}}) +
                         LaurentPoly(LaurentMonomial{1, {0, 0, -1}});
    CHECK(f11 == expect);
    CHECK(shape_weight_polynomial(Shape({2})) == LaurentPoly(LaurentMonomial{1, {0, -2, 0}}));
    CHECK(shape_weight_polynomial(Shape({0, 0})) == LaurentPoly(LaurentMonomial{1, {0, 0, -1}}));
}

TEST_CASE("weight polynomial at (1,1,1) counts fillings") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& shape : shapes_of_half_perimeter(n)) {
            auto count = tableaux_of_shape(shape).size();
            CHECK(shape_weight_polynomial(shape).eval(1, 1, 1) == Rational(long(count)));
        }
}

TEST_CASE("partition function") {
    // one tableau of shape (1) and one of shape (0,0)
    LaurentPoly z1 = LaurentPoly(LaurentMonomial{1, {0, -1, 0}}) +
                     LaurentPoly(LaurentMonomial{1, {0, 0, -1}});
    CHECK(partition_function(1) == z1);

    LaurentPoly z2 = LaurentPoly::parse(
        "1 * q^1 * a^-1 * b^-1 + 1 * q^0 * a^-2 * b^0 + 1 * q^0 * a^-1 * b^-1 + "
        "1 * q^0 * a^-1 * b^0 + 1 * q^0 * a^0 * b^-2 + 1 * q^0 * a^0 * b^-1");
    CHECK(partition_function(2) == z2);

    for (int n = 1; n <= 6; ++n)
        CHECK(partition_function(n).eval(1, 1, 1) == Rational(factorial(n + 1)));
}

TEST_CASE("tableau keys round trip") {
    for (const auto& t : enumerate_tableaux(5))
        CHECK(PermutationTableau::parse_key(t.key()) == t);
    CHECK(tab("|").shape() == Shape({0, 0}));
    CHECK(tab("").shape() == Shape({0}));
    CHECK_THROWS_AS(tab("1x0"), std::invalid_argument);
}
