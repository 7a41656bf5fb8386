#pragma once

#include "unipotent/balacarter.hpp"

#include <string>

namespace unipotent {

/// p^a. The trivial class has order p^0 = 1.
struct PrimePower {
    int p = 2;
    int a = 0;

    std::int64_t value() const;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Least p^a strictly greater than `bound`.
PrimePower least_power_exceeding(int p, int bound);

/// Order of a Richardson element of a distinguished parabolic: per factor
/// min{p^a : p^a > ht_J(rho)}, maximized over the factors of `system`.
/// Throws DomainError if p is bad for some factor.
PrimePower distinguished_order(const RootSystem& system, const DistParabolic& dp, int p);

/// Order of a class, computed inside the Levi where it is distinguished.
PrimePower orbit_order(const OrbitRecord& rec, int p);

/// omega_G <= 2p - 2 on the class's diagram. Throws DomainError unless p
/// is good for rs.
bool has_order_p(const OrbitRecord& rec, const RootSystem& rs, int p);

/// Weight criterion for a good A1: the A1's torus weights on Lie(G),
/// given as labels on Sigma(G), are at most 2p - 2.
bool is_good_a1_weights(const RootSystem& rs, const Labels& labels, int p);

enum class A1Kind { ExistsGoodChar, ExistsBadChar, NoneA1_3, NotOrderP };

std::string to_string(A1Kind kind);
A1Kind a1_kind_from_string(const std::string& s);

struct A1Status {
    A1Kind kind = A1Kind::NotOrderP;
    std::string citation;
    friend bool operator==(const A1Status&, const A1Status&) = default;
};

/// The distinguished classes of order p at bad primes.
enum class BadClassTag { C2Subregular, G2A1, G2A1_3 };

std::string to_string(BadClassTag tag);

/// A1 overgroups of a class from the good-characteristic catalogue. At a
/// bad prime the order is not known from the catalogue and the answer is
/// NotOrderP.
A1Status a1_overgroup_status(const GroupSpec& spec, int p, const OrbitRecord& rec, bool finite_context);

/// A1 overgroups of a bad-prime class. Throws DomainError if (spec, p)
/// does not carry the tagged class.
A1Status a1_overgroup_status(const GroupSpec& spec, int p, BadClassTag tag, bool finite_context);

} // namespace unipotent
