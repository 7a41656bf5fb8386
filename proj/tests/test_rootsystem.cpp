#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace unipotent;

TEST_CASE("parse simple and product specs")
{
    const GroupSpec e8 = parse_group_spec("E8");
    REQUIRE(e8.factors.size() == 1);
    CHECK(e8.factors[0] == SimpleFactor{Family::E, 8});
    CHECK(e8.torus_rank == 0);

    const GroupSpec a1a1 = parse_group_spec("A1xA1");
    CHECK(a1a1.factors == std::vector<SimpleFactor>{{Family::A, 1}, {Family::A, 1}});

    const GroupSpec mixed = parse_group_spec(" b3 X g2 +t2 ");
    CHECK(mixed.factors == std::vector<SimpleFactor>{{Family::B, 3}, {Family::G, 2}});
    CHECK(mixed.torus_rank == 2);

    const GroupSpec torus = parse_group_spec("+T3");
    CHECK(torus.factors.empty());
    CHECK(torus.torus_rank == 3);
}

TEST_CASE("low-rank coincidences normalize")
{
    CHECK(parse_group_spec("D2").factors == std::vector<SimpleFactor>{{Family::A, 1}, {Family::A, 1}});
    CHECK(parse_group_spec("D3").factors == std::vector<SimpleFactor>{{Family::A, 3}});
    CHECK(parse_group_spec("B1").factors == std::vector<SimpleFactor>{{Family::A, 1}});
    CHECK(parse_group_spec("C1").factors == std::vector<SimpleFactor>{{Family::A, 1}});
    // D2 = A1xA1: 1 + 1 positive roots, as in SO4
    CHECK(sys("D2").positive_roots.size() == 2);
}

TEST_CASE("parse errors name the token")
{
    for (const char* bad : {"E9", "F5", "G3", "A0", "D1", "Q2", "E", "A1x", "A1+T", "A1+Tx", ""}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_group_spec(bad), DomainError);
    }
    try {
        parse_group_spec("A2xE9");
        FAIL("no throw");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("E9") != std::string::npos);
    }
}

TEST_CASE("render round trips")
{
    for (const char* text : {"E8", "A1xA1", "B3xG2+T2", "+T3", "C2", "D4xA1"}) {
        const GroupSpec s = parse_group_spec(text);
        CHECK(parse_group_spec(to_string(s)) == s);
    }
    CHECK(to_string(parse_group_spec("a1xa1+t3")) == "A1xA1+T3");
}

TEST_CASE("C2 positive roots")
{
    const RootSystem c2 = sys("C2");
    std::set<std::vector<int>> got;
    for (const auto& r : c2.positive_roots)
        got.insert(vec(r.coeffs));
    const std::set<std::vector<int>> want{{1, 0}, {0, 1}, {1, 1}, {2, 1}};
    CHECK(got == want);
    CHECK(oracle::positive_part(oracle::roots_by_reflection(c2.cartan)) == want);
}

TEST_CASE("G2 positive roots and highest root")
{
    const RootSystem g2 = sys("G2");
    CHECK(g2.positive_roots.size() == 6);
    CHECK(vec(g2.highest_roots[0].coeffs) == std::vector<int>{3, 2});
    CHECK(g2.highest_roots[0].height() == 5);
    // alpha1 short: <alpha2, alpha1^vee> = -3
    CHECK(g2.cartan(0, 1) == -3);
    CHECK(g2.cartan(1, 0) == -1);
    CHECK(sys("A1").positive_roots.size() == 1);
}

TEST_CASE("Bourbaki highest roots")
{
    CHECK(vec(sys("E8").highest_roots[0].coeffs) == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
    CHECK(vec(sys("E7").highest_roots[0].coeffs) == std::vector<int>{2, 2, 3, 4, 3, 2, 1});
    CHECK(vec(sys("E6").highest_roots[0].coeffs) == std::vector<int>{1, 2, 2, 3, 2, 1});
    CHECK(vec(sys("F4").highest_roots[0].coeffs) == std::vector<int>{2, 3, 4, 2});
    CHECK(vec(sys("B4").highest_roots[0].coeffs) == std::vector<int>{1, 2, 2, 2});
    CHECK(vec(sys("C4").highest_roots[0].coeffs) == std::vector<int>{2, 2, 2, 1});
    CHECK(vec(sys("D5").highest_roots[0].coeffs) == std::vector<int>{1, 2, 2, 1, 1});
}

TEST_CASE("products are block diagonal")
{
    const RootSystem rs = sys("A2xG2+T1");
    CHECK(rs.rank() == 4);
    CHECK(rs.num_factors() == 2);
    CHECK(rs.positive_roots.size() == 3 + 6);
    CHECK(rs.dimension() == 8 + 14 + 1);
    CHECK(rs.cartan.block(0, 2, 2, 2).isZero());
    CHECK(rs.highest_roots.size() == 2);
    CHECK(vec(rs.highest_roots[1].coeffs) == std::vector<int>{0, 0, 3, 2});
}

TEST_CASE("identify type from a Cartan matrix")
{
    for (const auto& t : oracle::simple_types()) {
        CAPTURE(t);
        const GroupSpec s = parse_group_spec(t);
        const SimpleFactor f = identify_type(cartan_matrix(s.factors[0]));
        if (t == "C2")
            CHECK(f.rank == 2); // B2 = C2
        else
            CHECK(f == s.factors[0]);
    }
    const RootSystem rs = root_system_from_cartan(sys("D4xA2").cartan, {});
    CHECK(rs.spec.factors == std::vector<SimpleFactor>{{Family::D, 4}, {Family::A, 2}});
}

TEST_CASE("good primes")
{
    CHECK_FALSE(is_good_prime(parse_group_spec("E8"), 5));
    CHECK(is_good_prime(parse_group_spec("E8"), 7));
    CHECK_FALSE(is_good_prime(parse_group_spec("C2"), 2));
    CHECK(is_good_prime(parse_group_spec("A7"), 2));
    CHECK_FALSE(is_good_prime(parse_group_spec("G2"), 3));
    CHECK_FALSE(is_good_prime(parse_group_spec("A3xF4"), 3));
    CHECK(is_good_prime(parse_group_spec("A3xF4"), 5));
    CHECK(bad_primes({Family::E, 8}) == std::vector<int>{2, 3, 5});
    CHECK(bad_primes({Family::A, 5}).empty());
}

TEST_CASE("good primes match highest-root coefficients")
{
    for (const auto& t : oracle::simple_types()) {
        CAPTURE(t);
        const RootSystem rs = sys(t);
        const IntVector& c = rs.highest_roots[0].coeffs;
        for (int p : {2, 3, 5, 7}) {
            const bool divides = std::any_of(c.data(), c.data() + c.size(), [&](int x) { return x % p == 0; });
            CHECK(is_good_prime(rs.spec, p) == !divides);
        }
    }
}

TEST_CASE("a invariant")
{
    CHECK(a_invariant(parse_group_spec("E8")) == 9);
    CHECK(a_invariant(parse_group_spec("G2")) == 3);
    CHECK(a_invariant(parse_group_spec("+T3")) == 1);
    CHECK(a_invariant(parse_group_spec("A1xE6+T2")) == 7);
}
