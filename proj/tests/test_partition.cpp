#include <stdexcept>

#include <doctest.h>

#include "eulerpart/partition.hpp"
#include "oracle.hpp"

using namespace eulerpart;

namespace {
Partition P(std::initializer_list<long long> parts)
{
    return Partition::from_parts(parts);
}
} // namespace

TEST_CASE("make_partition canonicalizes and validates")
{
    CHECK(Partition::from_parts({1, 17, 2, 16, 4, 14, 7, 10}) ==
          P({17, 16, 14, 10, 7, 4, 2, 1}));
    CHECK(Partition::from_parts({1, 17, 2, 16, 4, 14, 7, 10}).weight() == 71);
    CHECK(Partition{} == P({}));
    CHECK(Partition{}.weight() == 0);
    CHECK(P({3, 3, 3}).parts() == std::vector<long long>{3, 3, 3});
    CHECK_THROWS_AS(Partition::from_parts({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_parts({-1}), std::invalid_argument);
}

TEST_CASE("multiplicity view round-trips")
{
    Partition p = P({8, 6, 6, 5, 4, 4, 2, 1});
    CHECK(from_multiplicities(multiplicity_view(p)) == p);
    CHECK(multiplicity_view(p).at(6) == 2);
}

TEST_CASE("conjugate")
{
    CHECK(conjugate(P({3, 2})) == P({2, 2, 1}));
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(P({5})) == P({1, 1, 1, 1, 1}));
}

TEST_CASE("two-modular conjugate")
{
    CHECK(two_modular_conjugate(P({17, 16, 14, 10, 7, 4, 2, 1})) ==
          P({15, 12, 10, 9, 8, 6, 6, 4, 1}));
    CHECK(two_modular_conjugate(Partition{}) == Partition{});
    CHECK(two_modular_conjugate(P({3})) == P({2, 1}));
}

TEST_CASE("statistics")
{
    CHECK(statistics(P({8, 7, 5, 3, 2, 1})).chains == 3);
    CHECK(statistics(P({8, 6, 6, 5, 4, 4, 2, 1})).distinct == 6);

    StatisticsBundle s = statistics(P({17, 16, 14, 10, 7, 4, 2, 1}));
    CHECK(s.odd_parts == 3);
    CHECK(s.alt_sum == 9);

    StatisticsBundle seven = statistics(P({7}));
    CHECK(seven.alt_sum == 7);
    CHECK(seven.odd_parts == 1);

    StatisticsBundle e = statistics(Partition{});
    CHECK(e.length == 0);
    CHECK(e.largest == 0);
    CHECK(e.alt_sum == 0);
    CHECK(e.chains == 0);
}

TEST_CASE("boulet weight exponents")
{
    CHECK(boulet_weight_exponents(Partition{}) ==
          std::array<long long, 4>{0, 0, 0, 0});
    CHECK(boulet_weight_exponents(P({3})) == std::array<long long, 4>{2, 1, 0, 0});
    CHECK(boulet_weight_exponents(P({4, 3})) ==
          std::array<long long, 4>{2, 2, 2, 1});
}

TEST_CASE("partition text format")
{
    CHECK(parse_partition("17,16,14,10,7,4,2,1") ==
          P({17, 16, 14, 10, 7, 4, 2, 1}));
    CHECK(parse_partition("3^2,5^3,9^2,13,19") ==
          P({19, 13, 9, 9, 5, 5, 5, 3, 3}));
    CHECK(parse_partition(" 3 , 1 ") == P({3, 1}));
    CHECK(parse_partition("") == Partition{});
    CHECK(format_partition(P({19, 13, 9, 9, 5, 5, 5, 3, 3})) ==
          "19,13,9,9,5,5,5,3,3");
    CHECK(format_partition(Partition{}) == "");
    CHECK_THROWS_AS(parse_partition("3,,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3^0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,"), std::invalid_argument);
}

TEST_CASE("statistic laws on all partitions of weight <= 30")
{
    for (long long n = 0; n <= 30; ++n) {
        for (const Partition& p : oracle::all_partitions(n)) {
            CAPTURE(format_partition(p));
            REQUIRE(conjugate(conjugate(p)) == p);
            StatisticsBundle s = statistics(p);
            REQUIRE(s.alt_sum == statistics(conjugate(p)).odd_parts);
            auto e = s.boulet_exponents;
            REQUIRE(e[0] + e[1] + e[2] + e[3] == p.weight());
        }
    }
}

TEST_CASE("two-modular conjugation is an involution on distinct parts, weight <= 30")
{
    for (long long n = 0; n <= 30; ++n) {
        for (const Partition& p : oracle::all_partitions(n)) {
            auto parts = p.parts();
            if (std::adjacent_find(parts.begin(), parts.end()) != parts.end())
                continue;
            CAPTURE(format_partition(p));
            Partition a = two_modular_conjugate(p);
            REQUIRE(two_modular_conjugate(a) == p);
            StatisticsBundle sp = statistics(p);
            StatisticsBundle sa = statistics(a);
            REQUIRE(sp.odd_parts == sa.odd_parts);
            REQUIRE(sp.alt_sum == 2 * sa.r2 + sa.odd_parts);
        }
    }
}
