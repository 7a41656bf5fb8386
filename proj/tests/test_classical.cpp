#include "oracles.hpp"
#include "support.hpp"

#include "unipotent/classical.hpp"

#include <doctest.h>

using namespace unipotent;

namespace {

std::vector<std::vector<int>> parts_of(const std::vector<Partition>& ps)
{
    std::vector<std::vector<int>> out;
    for (const auto& p : ps)
        out.push_back(p.parts);
    return out;
}

} // namespace

TEST_CASE("partition parsing")
{
    CHECK(parse_partition("2,6").parts == std::vector<int>{6, 2});
    CHECK(parse_partition("6,2").total() == 8);
    CHECK(to_string(parse_partition("5,3,1")) == "(5,3,1)");
    CHECK_THROWS_AS(parse_partition("6,,2"), DomainError);
    CHECK_THROWS_AS(parse_partition("6,0"), DomainError);
    CHECK_THROWS_AS(parse_partition("x"), DomainError);
}

TEST_CASE("distinguished partitions")
{
    CHECK(parts_of(distinguished_partitions(Family::C, 2)) == std::vector<std::vector<int>>{{4}});
    CHECK(parts_of(distinguished_partitions(Family::C, 4)) == std::vector<std::vector<int>>{{8}, {6, 2}});
    CHECK(parts_of(distinguished_partitions(Family::D, 4)) == std::vector<std::vector<int>>{{7, 1}, {5, 3}});
    CHECK(parts_of(distinguished_partitions(Family::A, 3)) == std::vector<std::vector<int>>{{4}});
    CHECK(parts_of(distinguished_partitions(Family::B, 4)) == std::vector<std::vector<int>>{{9}, {5, 3, 1}});
    CHECK_THROWS_AS(distinguished_partitions(Family::E, 6), DomainError);
}

TEST_CASE("distinguished partitions against brute force")
{
    for (Family f : {Family::B, Family::C, Family::D}) {
        for (int n = 2; n <= 8; ++n) {
            if (f == Family::D && n < 4)
                continue;
            std::set<std::vector<int>> want;
            for (const auto& p : oracle::partitions(oracle::natural_dim(f, n))) {
                std::set<int> distinct(p.begin(), p.end());
                const int parity = f == Family::C ? 0 : 1;
                if (distinct.size() == p.size()
                    && std::all_of(p.begin(), p.end(), [&](int k) { return k % 2 == parity; }))
                    want.insert(p);
            }
            const auto got = parts_of(distinguished_partitions(f, n));
            CHECK(std::set<std::vector<int>>(got.begin(), got.end()) == want);
            for (const auto& p : distinguished_partitions(f, n))
                CHECK(p.total() == oracle::natural_dim(f, n));
        }
    }
}

TEST_CASE("jordan order")
{
    CHECK(jordan_order(parse_partition("4"), 3).value() == 9);
    CHECK(jordan_order(parse_partition("6,2"), 5).value() == 25);
    CHECK(jordan_order(parse_partition("7,1"), 7).value() == 7);
}

TEST_CASE("validity and very even")
{
    CHECK(is_valid_partition(Family::C, 2, parse_partition("2,2")));
    CHECK_FALSE(is_valid_partition(Family::C, 2, parse_partition("3,1")));
    CHECK(is_valid_partition(Family::B, 2, parse_partition("3,1,1")));
    CHECK_FALSE(is_valid_partition(Family::B, 2, parse_partition("4,1")));
    CHECK(is_very_even(Family::D, parse_partition("2,2")));
    CHECK(is_very_even(Family::D, parse_partition("4,4,2,2")));
    CHECK_FALSE(is_very_even(Family::D, parse_partition("3,3,1,1")));
    CHECK_FALSE(is_very_even(Family::C, parse_partition("2,2")));
}

TEST_CASE("partition diagrams")
{
    CHECK(vec(partition_diagram(Family::C, 2, parse_partition("4"))) == std::vector<int>{2, 2});
    CHECK(vec(partition_diagram(Family::C, 2, parse_partition("2,2"))) == std::vector<int>{0, 2});
    CHECK(vec(partition_diagram(Family::C, 4, parse_partition("6,2"))) == std::vector<int>{2, 2, 0, 2});
    CHECK(vec(partition_diagram(Family::D, 4, parse_partition("5,3"))) == std::vector<int>{2, 0, 2, 2});
    CHECK(vec(partition_diagram(Family::A, 2, parse_partition("2,1"))) == std::vector<int>{1, 1});
    CHECK(vec(partition_diagram(Family::B, 3, parse_partition("5,1,1"))) == std::vector<int>{2, 2, 0});
    CHECK_THROWS_AS(partition_diagram(Family::C, 2, parse_partition("3,1")), DomainError);
}

TEST_CASE("partition diagrams agree with the oracle")
{
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
        for (int n = 2; n <= 6; ++n) {
            if (f == Family::D && n < 4)
                continue;
            const auto want = oracle::classical_diagrams(f, n);
            for (const auto& p : oracle::partitions(oracle::natural_dim(f, n))) {
                const Partition part{p};
                if (!is_valid_partition(f, n, part))
                    continue;
                CHECK(want.count(vec(partition_diagram(f, n, part))) == 1);
            }
        }
}

TEST_CASE("crosscheck")
{
    const auto c2 = crosscheck_distinguished(sys("C2"));
    CHECK(c2.ok());
    CHECK(c2.catalogue_count == 1);
    CHECK(c2.partition_count == 1);
    CHECK(c2.primes_checked == std::vector<int>{3, 5, 7, 11, 13});

    const auto c4 = crosscheck_distinguished(sys("C4"));
    CHECK(c4.ok());
    CHECK(c4.catalogue_count == 2);

    const auto a3 = crosscheck_distinguished(sys("A3"));
    CHECK(a3.ok());
    CHECK(a3.catalogue_count == 1);
    CHECK(a3.primes_checked.front() == 2);

    CHECK_THROWS_AS(crosscheck_distinguished(sys("G2")), DomainError);
    CHECK_THROWS_AS(crosscheck_distinguished(sys("A1xA1")), DomainError);
}
