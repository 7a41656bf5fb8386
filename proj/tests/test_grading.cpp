#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace unipotent;

namespace {

// dim g(j) counted over the reflection-closure roots.
int oracle_graded(const RootSystem& rs, const Labels& l, int j)
{
    int n = j == 0 ? rs.rank() + rs.spec.torus_rank : 0;
    for (const auto& r : oracle::roots_by_reflection(rs.cartan)) {
        int s = 0;
        for (std::size_t i = 0; i < r.size(); ++i)
            s += r[i] * l(static_cast<Eigen::Index>(i));
        n += s == j;
    }
    return n;
}

CoweightCoords coords(std::initializer_list<int> v)
{
    CoweightCoords c(static_cast<Eigen::Index>(v.size()));
    int i = 0;
    for (int x : v)
        c(i++) = Rational(x);
    return c;
}

} // namespace

TEST_CASE("pairing")
{
    CHECK(pairing(lab({2, 2}), lab({2, 1})) == 6);
    CHECK(pairing(lab({0, 2}), lab({3, 2})) == 4);
    CHECK(pairing(lab({0, 0, 0}), lab({1, 2, 1})) == 0);
    CHECK_THROWS_AS(pairing(lab({1, 2}), lab({1, 2, 3})), DomainError);
}

TEST_CASE("graded dimensions")
{
    const RootSystem c2 = sys("C2");
    const RootSystem g2 = sys("G2");
    // frozen from the reflection-closure oracle
    CHECK(oracle_graded(c2, lab({2, 2}), 0) == 2);
    CHECK(oracle_graded(c2, lab({2, 2}), 2) == 2);
    CHECK(oracle_graded(g2, lab({0, 2}), 2) == 4);
    CHECK(graded_dimension(c2, lab({2, 2}), 0) == 2);
    CHECK(graded_dimension(c2, lab({2, 2}), 2) == 2);
    CHECK(graded_dimension(g2, lab({0, 2}), 2) == 4);
    CHECK(graded_dimension(sys("A2+T2"), lab({0, 0}), 0) == 10);
}

TEST_CASE("highest lambda weight")
{
    CHECK(highest_lambda_weight(sys("G2"), lab({0, 2})) == 4);
    CHECK(highest_lambda_weight(sys("A1"), lab({2})) == 2);
    CHECK(highest_lambda_weight(sys("C2"), lab({2, 2})) == 6);
    CHECK(highest_lambda_weight(sys("+T2"), Labels(0)) == 0);
}

TEST_CASE("coordinate change")
{
    const RootSystem g2 = sys("G2");
    CHECK(vec(coords_to_labels(g2, coords({1, 0}))) == std::vector<int>{2, -3});
    CHECK(vec(coords_to_labels(sys("A2"), coords({1, 1}))) == std::vector<int>{1, 1});
    CHECK(coords_to_labels(sys("E8"), coords({0, 0, 0, 0, 0, 0, 0, 0})).isZero());
    for (const char* t : {"G2", "F4", "B3", "C3xA1", "E7"}) {
        const RootSystem rs = sys(t);
        oracle::IntVecGen gen(7);
        for (int k = 0; k < 10; ++k) {
            const Labels l = gen(rs.rank(), -3, 3);
            CHECK(coords_to_labels(rs, labels_to_coords(rs, l)) == l);
        }
    }
    // half-integral coords are fine, non-integral labels are not
    CoweightCoords half = coords({0, 0});
    half(0) = Rational(1, 2);
    CHECK_THROWS_AS(coords_to_labels(sys("A2"), half), InternalError);
}

TEST_CASE("dominantize")
{
    const RootSystem g2 = sys("G2");
    CHECK(vec(dominantize(g2, coords({1, 0}))) == std::vector<int>{1, 0});
    CHECK(vec(dominantize(sys("A2"), coords({1, 0}))) == std::vector<int>{1, 1});
    CHECK(vec(dominantize(g2, lab({2, 2}))) == std::vector<int>{2, 2});
    // frozen from the coordinate-space orbit walk
    const auto orbit = oracle::coweight_orbit_labels(g2.cartan, lab({1, 0}));
    std::vector<std::vector<int>> dom;
    for (const auto& l : orbit)
        if (std::all_of(l.begin(), l.end(), [](int x) { return x >= 0; }))
            dom.push_back(l);
    CHECK(dom == std::vector<std::vector<int>>{{1, 0}});
}

TEST_CASE("reflection is an involution")
{
    const RootSystem f4 = sys("F4");
    const Labels l = lab({3, -1, 2, -5});
    for (int i = 0; i < 4; ++i)
        CHECK(reflect(f4, reflect(f4, l, i), i) == l);
    CHECK(reflect(f4, l, 1)(1) == 1);
}

TEST_CASE("evenness")
{
    CHECK(is_even(lab({0, 2, -4})));
    CHECK_FALSE(is_even(lab({0, 1})));
    CHECK_FALSE(is_even(lab({-1})));
    CHECK(is_dominant(lab({0, 1})));
    CHECK_FALSE(is_dominant(lab({0, -1})));
}
