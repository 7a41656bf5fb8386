#include "unipotent/orders.hpp"

namespace unipotent {

std::int64_t PrimePower::value() const
{
    std::int64_t v = 1;
    for (int i = 0; i < a; ++i)
        v *= p;
    return v;
}

PrimePower least_power_exceeding(int p, int bound)
{
    if (!is_prime(p))
        throw DomainError("not a prime: " + std::to_string(p));
    PrimePower out{p, 0};
    std::int64_t v = 1;
    while (v <= bound) {
        v *= p;
        ++out.a;
    }
    return out;
}

PrimePower distinguished_order(const RootSystem& system, const DistParabolic& dp, int p)
{
    for (const auto& f : system.spec.factors)
        if (!is_good_prime(f, p))
            throw DomainError("order formula needs p good: p = " + std::to_string(p) + " is bad for "
                              + to_string(f));
    PrimePower out = least_power_exceeding(p, 0);
    for (int h : height_J(system, dp)) {
        const PrimePower q = least_power_exceeding(p, h);
        if (q.a > out.a)
            out = q;
    }
    return out;
}

PrimePower orbit_order(const OrbitRecord& rec, int p)
{
    if (rec.is_trivial())
        return least_power_exceeding(p, 0);
    return distinguished_order(rec.datum.levi.system, rec.datum.parabolic, p);
}

bool has_order_p(const OrbitRecord& rec, const RootSystem& rs, int p)
{
    if (!is_prime(p))
        throw DomainError("not a prime: " + std::to_string(p));
    if (!is_good_prime(rs.spec, p))
        throw DomainError("order-p criterion needs p good: p = " + std::to_string(p) + " is bad for "
                          + to_string(rs.spec));
    return highest_lambda_weight(rs, rec.diagram) <= 2 * p - 2;
}

bool is_good_a1_weights(const RootSystem& rs, const Labels& labels, int p)
{
    return highest_lambda_weight(rs, labels) <= 2 * p - 2;
}

std::string to_string(A1Kind kind)
{
    switch (kind) {
    case A1Kind::ExistsGoodChar:
        return "EXISTS_GOOD_CHAR";
    case A1Kind::ExistsBadChar:
        return "EXISTS_BAD_CHAR";
    case A1Kind::NoneA1_3:
        return "NONE_A1_3";
    case A1Kind::NotOrderP:
        return "NOT_ORDER_P";
    }
    return "?";
}

A1Kind a1_kind_from_string(const std::string& s)
{
    for (auto k : {A1Kind::ExistsGoodChar, A1Kind::ExistsBadChar, A1Kind::NoneA1_3, A1Kind::NotOrderP})
        if (to_string(k) == s)
            return k;
    throw DomainError("unknown A1 status '" + s + "'");
}

std::string to_string(BadClassTag tag)
{
    switch (tag) {
    case BadClassTag::C2Subregular:
        return "C2_SUBREGULAR";
    case BadClassTag::G2A1:
        return "G2_A1";
    case BadClassTag::G2A1_3:
        return "G2_A1_3";
    }
    return "?";
}

namespace {

std::string sigma_clause(bool finite_context)
{
    return finite_context ? "a sigma-stable subgroup of type A1" : "a subgroup of type A1";
}

} // namespace

A1Status a1_overgroup_status(const GroupSpec& spec, int p, const OrbitRecord& rec, bool finite_context)
{
    if (!is_good_prime(spec, p))
        return {A1Kind::NotOrderP, "p = " + std::to_string(p)
                                       + " is bad: element orders are known only for the bad-prime classes"};
    if (rec.is_trivial())
        return {A1Kind::NotOrderP, "u = 1"};
    const RootSystem rs = build_root_system(spec);
    if (!has_order_p(rec, rs, p))
        return {A1Kind::NotOrderP, "omega_G = " + std::to_string(highest_lambda_weight(rs, rec.diagram))
                                       + " > 2p-2: u does not have order p"};
    return {A1Kind::ExistsGoodChar, "Testerman, Thm 0.1/0.2: p good, u unipotent of order p; u lies in "
                                        + sigma_clause(finite_context)};
}

A1Status a1_overgroup_status(const GroupSpec& spec, int p, BadClassTag tag, bool finite_context)
{
    const bool c2 = spec.is_simple() && same_type(spec.factors[0], SimpleFactor{Family::C, 2});
    const bool g2 = spec.is_simple() && spec.factors[0] == SimpleFactor{Family::G, 2};
    switch (tag) {
    case BadClassTag::C2Subregular:
        if (!c2 || p != 2)
            break;
        return {A1Kind::ExistsBadChar, "Proud-Saxl-Testerman, Lem 4.1: C2, p = 2, u subregular; u lies in "
                                           + sigma_clause(finite_context)};
    case BadClassTag::G2A1:
        if (!g2 || p != 3)
            break;
        return {A1Kind::ExistsBadChar, "Proud-Saxl-Testerman, Lem 4.2: G2, p = 3, u in G2(a1); u lies in "
                                           + sigma_clause(finite_context)};
    case BadClassTag::G2A1_3:
        if (!g2 || p != 3)
            break;
        return {A1Kind::NoneA1_3,
                "Proud-Saxl-Testerman, Lem 4.2: G2, p = 3, u in A1^(3); u has no overgroup of type A1"};
    }
    throw DomainError("class " + to_string(tag) + " does not occur in " + to_string(spec) + " at p = "
                      + std::to_string(p));
}

} // namespace unipotent
