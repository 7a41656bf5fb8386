#include "support.hpp"

#include "unipotent/orders.hpp"

#include <doctest.h>

using namespace unipotent;

namespace {

const OrbitRecord& by_ht(const std::vector<OrbitRecord>& cat, int ht, int k = 1)
{
    for (const auto& r : cat)
        if (r.distinguished && r.ht == std::vector<int>{ht} && --k == 0)
            return r;
    throw std::runtime_error("no class with ht " + std::to_string(ht));
}

} // namespace

TEST_CASE("least power exceeding")
{
    CHECK(least_power_exceeding(11, 17).value() == 121);
    CHECK(least_power_exceeding(11, 17).a == 2);
    CHECK(least_power_exceeding(5, 9).value() == 25);
    CHECK(least_power_exceeding(3, 1).value() == 3);
    CHECK(least_power_exceeding(7, 0).value() == 1);
    CHECK(least_power_exceeding(2, 8).value() == 16);
    CHECK_THROWS_AS(least_power_exceeding(4, 3), DomainError);
}

TEST_CASE("height J")
{
    const RootSystem g2 = sys("G2");
    CHECK(height_J(g2, {{}, lab({2, 2})}) == std::vector<int>{5});
    CHECK(height_J(g2, {{0}, lab({0, 2})}) == std::vector<int>{2});
    CHECK(height_J(sys("A1"), {{}, lab({2})}) == std::vector<int>{1});
}

TEST_CASE("distinguished order")
{
    const auto e8 = enumerate_orbits(sys("E8"));
    const OrbitRecord& e8a3 = by_ht(e8, 17);
    CHECK(distinguished_order(e8a3.datum.levi.system, e8a3.datum.parabolic, 11).value() == 121);

    const auto e7 = enumerate_orbits(sys("E7"));
    const OrbitRecord& e7a3 = by_ht(e7, 9);
    CHECK(orbit_order(e7a3, 5).value() == 25);

    const RootSystem a1 = sys("A1");
    for (int p : {2, 3, 5, 7})
        CHECK(distinguished_order(a1, {{}, lab({2})}, p).value() == p);

    CHECK_THROWS_AS(distinguished_order(e8a3.datum.levi.system, e8a3.datum.parabolic, 5), DomainError);
}

TEST_CASE("orbit order")
{
    const auto e6 = enumerate_orbits(sys("E6"));
    // second-largest ht among distinguished classes of E6
    CHECK(orbit_order(by_ht(e6, 8), 7).value() == 49);
    CHECK(by_ht(e6, 8).name == std::optional<std::string>("E6(a1)"));

    const auto c2 = enumerate_orbits(sys("C2"));
    CHECK(orbit_order(*find_diagram(c2, lab({2, 2})), 3).value() == 9);
    CHECK(orbit_order(*find_diagram(c2, lab({0, 0})), 3).value() == 1);

    // non-distinguished: the order is read inside the Levi
    const auto g2 = enumerate_orbits(sys("G2"));
    CHECK(orbit_order(*find_diagram(g2, lab({1, 0})), 5).value() == 5);
}

TEST_CASE("order p criterion")
{
    const RootSystem g2 = sys("G2");
    const auto cat = enumerate_orbits(g2);
    CHECK(has_order_p(*find_diagram(cat, lab({0, 2})), g2, 5));
    CHECK_FALSE(has_order_p(*find_diagram(cat, lab({2, 2})), g2, 5));

    const RootSystem e8 = sys("E8");
    const auto e8cat = enumerate_orbits(e8);
    CHECK_FALSE(has_order_p(by_ht(e8cat, 17), e8, 11));
    CHECK(highest_lambda_weight(e8, by_ht(e8cat, 17).diagram) == 34);

    const RootSystem a1 = sys("A1");
    for (int p : {2, 3, 5})
        CHECK(has_order_p(enumerate_orbits(a1)[1], a1, p));

    CHECK_THROWS_AS(has_order_p(cat[1], g2, 3), DomainError);
}

TEST_CASE("good A1 weights")
{
    const RootSystem c2 = sys("C2");
    CHECK(highest_lambda_weight(c2, lab({0, 2})) == 2);
    CHECK(highest_lambda_weight(c2, lab({2, 0})) == 4);
    CHECK(is_good_a1_weights(c2, lab({0, 2}), 2));
    CHECK_FALSE(is_good_a1_weights(c2, lab({2, 0}), 2));
    CHECK(is_good_a1_weights(sys("E8"), Labels::Zero(8), 2));
}

TEST_CASE("A1 overgroup status")
{
    const GroupSpec e7s = parse_group_spec("E7");
    const RootSystem e7 = build_root_system(e7s);
    const auto cat = enumerate_orbits(e7);
    int order5 = 0;
    for (const auto& r : cat) {
        if (r.is_trivial() || !has_order_p(r, e7, 5))
            continue;
        ++order5;
        CHECK(a1_overgroup_status(e7s, 5, r, false).kind == A1Kind::ExistsGoodChar);
    }
    CHECK(order5 > 0);
    CHECK(a1_overgroup_status(e7s, 5, cat[0], false).kind == A1Kind::NotOrderP);
    CHECK(a1_overgroup_status(e7s, 5, by_ht(cat, 17), false).kind == A1Kind::NotOrderP);
    CHECK(a1_overgroup_status(e7s, 3, by_ht(cat, 17), false).kind == A1Kind::NotOrderP);

    const GroupSpec g2 = parse_group_spec("G2");
    const GroupSpec c2 = parse_group_spec("C2");
    CHECK(a1_overgroup_status(g2, 3, BadClassTag::G2A1_3, false).kind == A1Kind::NoneA1_3);
    CHECK(a1_overgroup_status(g2, 3, BadClassTag::G2A1, false).kind == A1Kind::ExistsBadChar);
    CHECK(a1_overgroup_status(c2, 2, BadClassTag::C2Subregular, true).kind == A1Kind::ExistsBadChar);
    CHECK(a1_overgroup_status(c2, 2, BadClassTag::C2Subregular, true).citation.find("sigma-stable")
          != std::string::npos);
    CHECK_THROWS_AS(a1_overgroup_status(c2, 3, BadClassTag::C2Subregular, false), DomainError);
    CHECK_THROWS_AS(a1_overgroup_status(g2, 2, BadClassTag::G2A1, false), DomainError);
}

TEST_CASE("A1 kind strings round trip")
{
    for (auto k : {A1Kind::ExistsGoodChar, A1Kind::ExistsBadChar, A1Kind::NoneA1_3, A1Kind::NotOrderP})
        CHECK(a1_kind_from_string(to_string(k)) == k);
    CHECK_THROWS_AS(a1_kind_from_string("MAYBE"), DomainError);
}
