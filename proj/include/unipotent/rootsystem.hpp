#pragma once

#include "unipotent/types.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace unipotent {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleFactor {
    Family family;
    int rank;

    bool is_exceptional() const
    {
        return family == Family::E || family == Family::F || family == Family::G;
    }
    friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

std::string to_string(const SimpleFactor& f);

/// Equal up to the isomorphism B2 = C2, which the parser keeps apart.
inline bool same_type(const SimpleFactor& a, const SimpleFactor& b)
{
    auto bc2 = [](const SimpleFactor& f) { return f.rank == 2 && (f.family == Family::B || f.family == Family::C); };
    return a == b || (bc2(a) && bc2(b));
}

/// A reductive group type: simple factors in the order written, plus the
/// rank of a central torus.
struct GroupSpec {
    std::vector<SimpleFactor> factors;
    int torus_rank = 0;

    int semisimple_rank() const;
    bool is_simple() const { return factors.size() == 1 && torus_rank == 0; }
    bool has_exceptional_factor() const;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Grammar: FACTOR ("x" FACTOR)* ("+T" INT)?, FACTOR = letter rank,
/// case-insensitive. Low-rank coincidences are normalized:
///
///   B1, C1 -> A1      D2 -> A1xA1      D3 -> A3
///
/// Throws DomainError naming the offending token.
GroupSpec parse_group_spec(std::string_view text);
std::string to_string(const GroupSpec& spec);

/// Bourbaki Cartan matrix of one simple type, cartan(i, j) = <alpha_j, alpha_i^vee>.
IntMatrix cartan_matrix(const SimpleFactor& f);

struct Root {
    IntVector coeffs; ///< over all simple roots of the system, block by factor
    int factor = 0;

    int height() const { return coeffs.sum(); }
};

/// A root system given by its Cartan matrix, block-diagonal by factor.
/// Roots are integer coefficient vectors over the simple roots; rows of
/// `cartan` are the simple coroots.
struct RootSystem {
    GroupSpec spec;
    IntMatrix cartan;
    std::vector<int> factor_of_node;
    std::vector<IndexSet> factor_nodes;
    std::vector<Root> positive_roots; ///< sorted by height, then coefficients
    std::vector<Root> highest_roots;  ///< one per factor

    int rank() const { return static_cast<int>(cartan.rows()); }
    int num_factors() const { return static_cast<int>(factor_nodes.size()); }
    int dimension() const
    {
        return 2 * static_cast<int>(positive_roots.size()) + rank() + spec.torus_rank;
    }

    /// <beta, alpha_i^vee> for every simple coroot i.
    IntVector coroot_pairings(const IntVector& coeffs) const { return cartan * coeffs; }
};

RootSystem build_root_system(const GroupSpec& spec);

/// Closure of the simple roots under root strings. Factors are the
/// connected components of the Dynkin graph; `spec` is recorded verbatim
/// (its factor list must match the components when non-empty).
RootSystem root_system_from_cartan(const IntMatrix& cartan, GroupSpec spec);

/// Identifies the Dynkin type of a connected Cartan matrix, up to the
/// isomorphisms B2 = C2.
SimpleFactor identify_type(const IntMatrix& connected_cartan);

bool is_good_prime(const SimpleFactor& f, int p);
bool is_good_prime(const GroupSpec& spec, int p);
std::vector<int> bad_primes(const SimpleFactor& f);

/// max(1, rank(G_i) + 1 over simple factors).
int a_invariant(const GroupSpec& spec);

} // namespace unipotent
