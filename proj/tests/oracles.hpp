#pragma once

// Brute-force references used by the tests. Nothing here calls the
// enumeration code it is checking.

#include "unipotent/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using unipotent::Family;
using unipotent::IntMatrix;
using unipotent::IntVector;

inline int positive_root_count(Family f, int n)
{
    switch (f) {
    case Family::A:
        return n * (n + 1) / 2;
    case Family::B:
    case Family::C:
        return n * n;
    case Family::D:
        return n * (n - 1);
    case Family::E:
        return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F:
        return 24;
    case Family::G:
        return 6;
    }
    return -1;
}

inline std::vector<int> as_vec(const IntVector& v) { return {v.data(), v.data() + v.size()}; }

// All roots as the Weyl orbit of the simple roots:
// s_i(beta) = beta - <beta, alpha_i^vee> alpha_i.
inline std::set<std::vector<int>> roots_by_reflection(const IntMatrix& cartan)
{
    const int n = static_cast<int>(cartan.rows());
    std::set<std::vector<int>> seen;
    std::vector<IntVector> todo;
    for (int i = 0; i < n; ++i) {
        IntVector e = IntVector::Zero(n);
        e(i) = 1;
        todo.push_back(e);
        seen.insert(as_vec(e));
    }
    while (!todo.empty()) {
        IntVector b = todo.back();
        todo.pop_back();
        for (int i = 0; i < n; ++i) {
            IntVector r = b;
            r(i) -= cartan.row(i).dot(b);
            if (seen.insert(as_vec(r)).second)
                todo.push_back(r);
        }
    }
    return seen;
}

inline std::set<std::vector<int>> positive_part(const std::set<std::vector<int>>& roots)
{
    std::set<std::vector<int>> out;
    for (const auto& r : roots)
        if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; }))
            out.insert(r);
    return out;
}

// Labels of a coweight with integer coroot coordinates c: <lambda, alpha_j>
// = sum_i c_i <alpha_j, alpha_i^vee>.
inline IntVector labels_of(const IntMatrix& cartan, const IntVector& c) { return cartan.transpose() * c; }

// The Weyl orbit of a coweight, walked in coroot coordinates:
// s_i(lambda) = lambda - <lambda, alpha_i> alpha_i^vee.
inline std::set<std::vector<int>> coweight_orbit_labels(const IntMatrix& cartan, const IntVector& c0)
{
    const int n = static_cast<int>(cartan.rows());
    std::set<std::vector<int>> coords{as_vec(c0)};
    std::vector<IntVector> todo{c0};
    while (!todo.empty()) {
        IntVector c = todo.back();
        todo.pop_back();
        const IntVector lab = labels_of(cartan, c);
        for (int i = 0; i < n; ++i) {
            IntVector d = c;
            d(i) -= lab(i);
            if (coords.insert(as_vec(d)).second)
                todo.push_back(d);
        }
    }
    std::set<std::vector<int>> out;
    for (const auto& c : coords)
        out.insert(as_vec(labels_of(cartan, Eigen::Map<const IntVector>(c.data(), n))));
    return out;
}

// Number of partitions of n.
inline long partition_count(int n)
{
    std::vector<long> p(n + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int m = k; m <= n; ++m)
            p[m] += p[m - k];
    return p[n];
}

inline void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(n - k, k, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> partitions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

// Jordan types of unipotent classes of the classical group: even parts
// paired for B, D; odd parts paired for C.
inline bool classical_ok(Family f, const std::vector<int>& part)
{
    std::map<int, int> mult;
    for (int k : part)
        ++mult[k];
    for (auto [k, m] : mult) {
        if ((f == Family::B || f == Family::D) && k % 2 == 0 && m % 2)
            return false;
        if (f == Family::C && k % 2 == 1 && m % 2)
            return false;
    }
    return true;
}

inline int natural_dim(Family f, int n)
{
    return f == Family::A ? n + 1 : f == Family::B ? 2 * n + 1 : 2 * n;
}

// Weighted diagrams of all classes of the classical group, from the
// eigenvalues of a neutral element on the natural module. Very even D
// partitions contribute both diagrams.
inline std::set<std::vector<int>> classical_diagrams(Family f, int n)
{
    std::set<std::vector<int>> out;
    for (const auto& part : partitions(natural_dim(f, n))) {
        if (f != Family::A && !classical_ok(f, part))
            continue;
        std::vector<int> h;
        for (int m : part)
            for (int k = 0; k < m; ++k)
                h.push_back(m - 1 - 2 * k);
        std::sort(h.rbegin(), h.rend());
        std::vector<int> d(n);
        if (f == Family::A) {
            for (int i = 0; i < n; ++i)
                d[i] = h[i] - h[i + 1];
            out.insert(d);
            continue;
        }
        for (int i = 0; i + 1 < n; ++i)
            d[i] = h[i] - h[i + 1];
        if (f == Family::B)
            d[n - 1] = h[n - 1];
        else if (f == Family::C)
            d[n - 1] = 2 * h[n - 1];
        else {
            d[n - 1] = h[n - 2] + h[n - 1];
            std::vector<int> twin = d;
            twin[n - 2] = h[n - 2] + h[n - 1];
            twin[n - 1] = h[n - 2] - h[n - 1];
            out.insert(twin);
        }
        out.insert(d);
    }
    return out;
}

// Every simple type of rank <= max_rank, one per isomorphism class except
// that B2 and C2 both appear.
inline std::vector<std::string> simple_types(int max_rank = 8)
{
    std::vector<std::string> out;
    for (int n = 1; n <= max_rank; ++n)
        out.push_back("A" + std::to_string(n));
    for (int n = 2; n <= max_rank; ++n)
        out.push_back("B" + std::to_string(n));
    for (int n = 2; n <= max_rank; ++n)
        out.push_back("C" + std::to_string(n));
    for (int n = 4; n <= max_rank; ++n)
        out.push_back("D" + std::to_string(n));
    for (const char* t : {"E6", "E7", "E8", "F4", "G2"})
        if (t[1] - '0' <= max_rank)
            out.push_back(t);
    return out;
}

// Fixed-seed random integer vector generator for property tests.
struct IntVecGen {
    std::mt19937 rng;
    explicit IntVecGen(unsigned seed) : rng(seed) {}

    IntVector operator()(int n, int lo, int hi)
    {
        std::uniform_int_distribution<int> d(lo, hi);
        IntVector v(n);
        for (int i = 0; i < n; ++i)
            v(i) = d(rng);
        return v;
    }
};

} // namespace oracle
