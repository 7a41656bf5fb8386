#pragma once

#include "unipotent/orders.hpp"

#include <string>
#include <vector>

namespace unipotent {

/// Jordan block sizes, weakly decreasing.
struct Partition {
    std::vector<int> parts;

    int total() const;
    int largest() const { return parts.empty() ? 0 : parts.front(); }
    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

std::string to_string(const Partition& p);
Partition parse_partition(std::string_view text);

/// Distinguished classes of a classical group in good characteristic:
/// A_n: (n+1); B_n: distinct odd parts of 2n+1; C_n: distinct even parts
/// of 2n; D_n: distinct odd parts of 2n. Listed in decreasing
/// lexicographic order.
std::vector<Partition> distinguished_partitions(Family family, int rank);

/// True if `part` labels a unipotent class of the classical group: a
/// partition of the natural-module dimension where even parts (B, D) or
/// odd parts (C) have even multiplicity.
bool is_valid_partition(Family family, int rank, const Partition& part);

/// D_n partitions with only even parts, each of even multiplicity; these
/// label two classes swapped by the graph automorphism.
bool is_very_even(Family family, const Partition& part);

/// Weighted Dynkin diagram of the class with the given Jordan blocks, read
/// off the eigenvalues m-1, m-3, ..., 1-m of a neutral element on the
/// natural module. For very even D_n partitions this is the class whose
/// diagram has the nonzero label on alpha_n.
Labels partition_diagram(Family family, int rank, const Partition& part);

/// Least p^a >= the largest Jordan block.
PrimePower jordan_order(const Partition& part, int p);

struct CrosscheckReport {
    SimpleFactor type;
    std::size_t catalogue_count = 0;
    std::size_t partition_count = 0;
    std::vector<int> primes_checked;
    std::vector<std::string> mismatches;

    bool ok() const { return mismatches.empty() && catalogue_count == partition_count; }
};

/// Compares the distinguished part of the root-system catalogue with the
/// partition description: class counts, and for every good prime up to
/// `max_prime` the multisets of element orders.
CrosscheckReport crosscheck_distinguished(const RootSystem& rs, int max_prime = 13);

} // namespace unipotent
