#include "unipotent/classical.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace unipotent {

namespace {

// Partitions of `n` into distinct parts from {start, start+2, ...}, largest
// part at most `max_part`, appended in decreasing lexicographic order.
void distinct_parts(int n, int max_part, int start, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (n == 0) {
        out.push_back({prefix});
        return;
    }
    int top = std::min(n, max_part);
    if ((top - start) % 2 != 0)
        --top;
    for (int part = top; part >= start; part -= 2) {
        prefix.push_back(part);
        distinct_parts(n - part, part - 2, start, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

int Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string to_string(const Partition& p)
{
    std::string out = "(";
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p.parts[i]);
    }
    return out + ")";
}

Partition parse_partition(std::string_view text)
{
    Partition p;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string_view tok = text.substr(start, comma - start);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || v <= 0)
            throw DomainError("partition: bad part '" + std::string(tok) + "'");
        p.parts.push_back(v);
        start = comma + 1;
    }
    std::sort(p.parts.rbegin(), p.parts.rend());
    return p;
}

std::vector<Partition> distinguished_partitions(Family family, int n)
{
    std::vector<Partition> out;
    std::vector<int> prefix;
    switch (family) {
    case Family::A:
        out.push_back({{n + 1}});
        break;
    case Family::B:
        distinct_parts(2 * n + 1, 2 * n + 1, 1, prefix, out);
        break;
    case Family::C:
        distinct_parts(2 * n, 2 * n, 2, prefix, out);
        break;
    case Family::D:
        distinct_parts(2 * n, 2 * n, 1, prefix, out);
        break;
    default:
        throw DomainError(std::string("distinguished_partitions: not a classical family: ")
                          + static_cast<char>(family));
    }
    return out;
}

bool is_valid_partition(Family family, int n, const Partition& part)
{
    int dim = 0;
    int restricted_parity = -1; // parts of this parity need even multiplicity
    switch (family) {
    case Family::A:
        dim = n + 1;
        break;
    case Family::B:
        dim = 2 * n + 1;
        restricted_parity = 0;
        break;
    case Family::C:
        dim = 2 * n;
        restricted_parity = 1;
        break;
    case Family::D:
        dim = 2 * n;
        restricted_parity = 0;
        break;
    default:
        return false;
    }
    if (part.total() != dim || part.parts.empty() || part.parts.back() <= 0)
        return false;
    if (!std::is_sorted(part.parts.rbegin(), part.parts.rend()))
        return false;
    for (int v : part.parts)
        if (v % 2 == restricted_parity && std::count(part.parts.begin(), part.parts.end(), v) % 2 != 0)
            return false;
    return true;
}

bool is_very_even(Family family, const Partition& part)
{
    return family == Family::D && !part.parts.empty()
        && std::all_of(part.parts.begin(), part.parts.end(), [&](int v) {
               return v % 2 == 0 && std::count(part.parts.begin(), part.parts.end(), v) % 2 == 0;
           });
}

Labels partition_diagram(Family family, int n, const Partition& part)
{
    if (!is_valid_partition(family, n, part))
        throw DomainError("partition " + to_string(part) + " does not label a class of "
                          + to_string(SimpleFactor{family, n}));
    std::vector<int> eig;
    for (int m : part.parts)
        for (int k = m - 1; k >= 1 - m; k -= 2)
            eig.push_back(k);
    std::sort(eig.rbegin(), eig.rend());

    Labels labels(n);
    if (family == Family::A) {
        for (int i = 0; i < n; ++i)
            labels(i) = eig[i] - eig[i + 1];
        return labels;
    }
    // epsilon-coordinates of the neutral element: the n largest eigenvalues
    for (int i = 0; i + 1 < n; ++i)
        labels(i) = eig[i] - eig[i + 1];
    switch (family) {
    case Family::B: // alpha_n = e_n
        labels(n - 1) = eig[n - 1];
        break;
    case Family::C: // alpha_n = 2 e_n
        labels(n - 1) = 2 * eig[n - 1];
        break;
    default: // D: alpha_n = e_{n-1} + e_n
        labels(n - 1) = eig[n - 2] + eig[n - 1];
        break;
    }
    return labels;
}

PrimePower jordan_order(const Partition& part, int p)
{
    // least p^a >= m is least p^a > m - 1
    return least_power_exceeding(p, part.largest() - 1);
}

CrosscheckReport crosscheck_distinguished(const RootSystem& rs, int max_prime)
{
    if (!rs.spec.is_simple() || rs.spec.factors[0].is_exceptional())
        throw DomainError("crosscheck_distinguished: needs one classical factor, got " + to_string(rs.spec));
    CrosscheckReport report;
    report.type = rs.spec.factors[0];

    std::vector<OrbitRecord> dist;
    for (auto& rec : enumerate_orbits(rs))
        if (rec.distinguished)
            dist.push_back(std::move(rec));
    const auto parts = distinguished_partitions(report.type.family, report.type.rank);
    report.catalogue_count = dist.size();
    report.partition_count = parts.size();
    if (dist.size() != parts.size())
        report.mismatches.push_back(to_string(report.type) + ": " + std::to_string(dist.size())
                                    + " distinguished classes vs " + std::to_string(parts.size())
                                    + " distinguished partitions");

    for (int p = 2; p <= max_prime; ++p) {
        if (!is_prime(p) || !is_good_prime(rs.spec, p))
            continue;
        report.primes_checked.push_back(p);
        std::vector<std::int64_t> from_roots, from_blocks;
        for (const auto& rec : dist)
            from_roots.push_back(orbit_order(rec, p).value());
        for (const auto& part : parts)
            from_blocks.push_back(jordan_order(part, p).value());
        std::sort(from_roots.begin(), from_roots.end());
        std::sort(from_blocks.begin(), from_blocks.end());
        if (from_roots != from_blocks)
            report.mismatches.push_back(to_string(report.type) + ", p = " + std::to_string(p)
                                        + ": order multisets differ");
    }
    return report;
}

} // namespace unipotent
