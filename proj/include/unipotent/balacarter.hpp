#pragma once

#include "unipotent/grading.hpp"

#include <optional>
#include <string>
#include <vector>

namespace unipotent {

/// A distinguished parabolic P_J of some (sub)system: J is the set of
/// simple roots with label 0, every other label is 2.
struct DistParabolic {
    IndexSet J;    ///< local simple-root indices of the owning system
    Labels labels; ///< 2 off J, 0 on J
};

Labels parabolic_labels(int rank, const IndexSet& J);

/// The root subsystem of all roots supported on a subset of simple roots,
/// re-indexed by position in `subset`.
struct LeviSystem {
    IndexSet subset; ///< ambient simple-root indices, ascending
    RootSystem system;
};

/// A Bala-Carter pair (L, P): a standard Levi and a distinguished
/// parabolic of its derived subgroup.
struct LeviDatum {
    LeviSystem levi;
    DistParabolic parabolic;
};

/// dim g(0) = dim g(2) for the even cocharacter with J as its zero set.
/// Uses the semisimple rank only.
bool is_distinguished_subset(const RootSystem& rs, const IndexSet& J);

/// All distinguished parabolics, J in lexicographic order. Product systems
/// combine their factors' results.
std::vector<DistParabolic> enumerate_distinguished_parabolics(const RootSystem& rs);

LeviSystem levi_root_system(const RootSystem& rs, const IndexSet& subset);

/// Extends the parabolic's labels on the Levi to a cocharacter of G lying
/// in the span of the Levi's simple coroots. Throws InternalError if the
/// resulting labels are not integral.
Labels extend_levi_cocharacter(const RootSystem& rs, const LeviDatum& datum);

/// A unipotent class in good characteristic.
struct OrbitRecord {
    LeviDatum datum;
    Labels diagram; ///< dominant weighted Dynkin diagram on all of Sigma(G)
    bool distinguished = false;
    std::vector<int> ht; ///< ht_J(rho) for each factor of the Levi
    int dim_g0 = 0;
    int dim_g1 = 0;
    std::optional<std::string> name;

    int centralizer_dimension() const { return dim_g0 + dim_g1; }
    bool is_trivial() const { return datum.levi.subset.empty(); }
};

/// ht_J(rho) per factor: highest-root coefficients summed over simple
/// roots outside J.
std::vector<int> height_J(const RootSystem& system, const DistParabolic& dp);

/// The unipotent class catalogue, sorted by diagram. For products this is
/// the cartesian product of the factor catalogues. `jobs` > 1 spreads the
/// Levi subsets over threads; the result does not depend on it.
std::vector<OrbitRecord> enumerate_orbits(const RootSystem& rs, int jobs = 1);

/// Same enumeration, deduplicated without dominantizing: the key is the
/// graded dimensions together with the pairings of the extended
/// cocharacter against small Weyl orbits of fundamental weights. Used to
/// cross-check the diagram dedup; returns the number of distinct keys.
std::size_t count_orbits_by_invariants(const RootSystem& rs);

/// Bala-Carter label from the bundled table, if known.
std::optional<std::string> bala_carter_name(const GroupSpec& spec, const Labels& diagram);

} // namespace unipotent
