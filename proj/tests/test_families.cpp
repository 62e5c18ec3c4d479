#include <algorithm>
#include <stdexcept>

#include <doctest.h>

#include "eulerpart/families.hpp"
#include "oracle.hpp"

using namespace eulerpart;

namespace {
Partition P(std::initializer_list<long long> parts)
{
    return Partition::from_parts(parts);
}
} // namespace

TEST_CASE("membership clauses")
{
    CHECK(FamilySpec::a1().contains(P({15, 12, 10, 9, 8, 6, 6, 4, 1})));
    CHECK(FamilySpec::a2().contains(P({19, 18, 13, 10, 6, 5})));
    CHECK_FALSE(FamilySpec::a2().contains(P({4})));
    CHECK_FALSE(FamilySpec::a1().contains(P({6, 1})));  // gap 5 > 4
    CHECK_FALSE(FamilySpec::a1().contains(P({7, 3, 3, 2})));  // 3 repeated, odd
    CHECK(FamilySpec::a1().contains(P({7, 3, 2})));
    CHECK_FALSE(FamilySpec::a1().contains(P({6, 2})));  // gap 4 with even part
    CHECK_FALSE(FamilySpec::a1().contains(P({5})));     // smallest part >= 4

    // every family contains the empty partition
    for (const char* spec : {"All", "D", "O", "A1", "A2", "AO1:N=4,A=1,3",
                             "AO2:N=4,A=1,3", "C1:N=2,A=1,2,3", "C2:N=2,A=1,2,3",
                             "B1:N=3,Arep=1,Anon=2", "B2:N=3,Arep=1,Anon=2"})
        CHECK(FamilySpec::parse(spec).contains(Partition{}));
}

TEST_CASE("A1 gap of exactly 4 between odd parts")
{
    // (7,3) has difference 4 and both parts odd; clause 2 admits it
    CHECK(FamilySpec::a1().contains(P({7, 3})));
}

TEST_CASE("enumeration of D(7) and O(7)")
{
    auto d7 = FamilySpec::distinct().enumerate(7);
    std::vector<Partition> expected_d = {P({7}), P({6, 1}), P({5, 2}), P({4, 3}),
                                         P({4, 2, 1})};
    CHECK(d7 == expected_d);

    auto o7 = FamilySpec::odd().enumerate(7);
    std::vector<Partition> expected_o = {P({7}), P({5, 1, 1}), P({3, 3, 1}),
                                         P({3, 1, 1, 1, 1}),
                                         P({1, 1, 1, 1, 1, 1, 1})};
    CHECK(o7 == expected_o);

    CHECK(FamilySpec::all().enumerate(0) == std::vector<Partition>{Partition{}});
    CHECK(FamilySpec::distinct().cardinality(10) == 10);
    CHECK(FamilySpec::distinct().cardinality(7) == 5);
    CHECK(FamilySpec::odd().cardinality(0) == 1);
}

TEST_CASE("C1 and C2 cardinalities agree at n=7")
{
    FamilySpec c1 = FamilySpec::parse("C1:N=2,A=1,2,3");
    FamilySpec c2 = FamilySpec::parse("C2:N=2,A=1,2,3");
    CHECK(c1.cardinality(7) == c2.cardinality(7));
}

TEST_CASE("pruned enumeration matches filter-all-partitions, n <= 20")
{
    const char* specs[] = {"All", "D", "O", "A1", "A2",
                           "AO1:N=4,A=1,3", "AO2:N=4,A=1,3",
                           "AO1:N=5,A=2,3", "AO2:N=5,A=2,3",
                           "C1:N=2,A=1,2,3", "C2:N=2,A=1,2,3",
                           "C1:N=3,A=1,4,5", "C2:N=3,A=1,4,5",
                           "B1:N=3,Arep=1,Anon=2", "B2:N=3,Arep=1,Anon=2",
                           "B1:N=4,Arep=2,Anon=1,3", "B2:N=4,Arep=2,Anon=1,3"};
    for (const char* text : specs) {
        FamilySpec spec = FamilySpec::parse(text);
        CAPTURE(text);
        for (long long n = 0; n <= 20; ++n) {
            std::vector<Partition> filtered;
            for (const Partition& p : oracle::all_partitions(n))
                if (spec.contains(p))
                    filtered.push_back(p);
            std::sort(filtered.begin(), filtered.end());  // decreasing lex
            auto enumerated = spec.enumerate(n);
            CAPTURE(n);
            REQUIRE(enumerated == filtered);
        }
    }
}

TEST_CASE("joint distributions for Table 1")
{
    using Rows = std::vector<std::vector<long long>>;
    Rows expected = {{1, 1}, {1, 3}, {1, 3}, {1, 5}, {1, 7}};
    CHECK(joint_distribution(FamilySpec::distinct(), 7,
                             {Statistic::OddParts, Statistic::AltSum}) == expected);
    CHECK(joint_distribution(FamilySpec::odd(), 7,
                             {Statistic::OddMultParts, Statistic::Length}) ==
          expected);
    CHECK(joint_distribution(FamilySpec::distinct(), 0, {Statistic::AltSum}) ==
          Rows{{0}});
}

TEST_CASE("fine composite selector")
{
    // valid over odd-part partitions (and the empty partition counts 0)
    CHECK(joint_distribution(FamilySpec::odd(), 0, {Statistic::FineComposite}) ==
          std::vector<std::vector<long long>>{{0}});
    // rejected when an enumerated partition has an even largest part
    CHECK_THROWS_AS(joint_distribution(FamilySpec::all(), 2,
                                       {Statistic::FineComposite}),
                    std::invalid_argument);
}

TEST_CASE("family spec grammar")
{
    CHECK(FamilySpec::parse("AO1:N=4,A=1,3").to_string() == "AO1:N=4,A=1,3");
    CHECK(FamilySpec::parse("C1:N=2,A=1,2,3").to_string() == "C1:N=2,A=1,2,3");
    CHECK(FamilySpec::parse("B1:N=3,Arep=1,Anon=2").to_string() ==
          "B1:N=3,Arep=1,Anon=2");
    CHECK(FamilySpec::parse(" D ").kind() == FamilyKind::Distinct);

    CHECK_THROWS_AS(FamilySpec::parse("Q"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("AO1"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("AO1:N=4,A=0,3"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("AO1:N=4,A=4"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("AO1:N=4,A="), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("B1:N=3,Arep=1,Anon=1"),
                    std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("C1:N=0,A=1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_statistic("bogus"), std::invalid_argument);
}

TEST_CASE("counting identities at small scale")
{
    // Euler to n <= 40
    for (long long n = 0; n <= 40; ++n)
        REQUIRE(FamilySpec::distinct().cardinality(n) ==
                FamilySpec::odd().cardinality(n));
}
