#include "unipotent/balacarter.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace unipotent {

namespace {

std::vector<int> as_key(const IntVector& v) { return std::vector<int>(v.data(), v.data() + v.size()); }

// All subsets of `nodes` (ascending), in lexicographic order.
std::vector<IndexSet> lex_subsets(const IndexSet& nodes)
{
    std::vector<IndexSet> out;
    const std::size_t n = nodes.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        IndexSet s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i))
                s.push_back(nodes[i]);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool factor_distinguished(const RootSystem& rs, int factor, const Labels& labels)
{
    int g0 = static_cast<int>(rs.factor_nodes[factor].size());
    int g2 = 0;
    for (const auto& r : rs.positive_roots) {
        if (r.factor != factor)
            continue;
        const int w = pairing(labels, r);
        if (w == 0)
            g0 += 2;
        else if (w == 2)
            ++g2;
    }
    // g(2) only receives positive roots since labels are non-negative
    return g0 == g2;
}

struct Candidate {
    Labels diagram;
    LeviDatum datum;
};

std::vector<OrbitRecord> enumerate_simple(const RootSystem& rs, int jobs)
{
    const int n = rs.rank();
    IndexSet all(n);
    for (int i = 0; i < n; ++i)
        all[i] = i;
    const std::vector<IndexSet> subsets = lex_subsets(all);

    std::vector<std::vector<Candidate>> per_subset(subsets.size());
    auto work = [&](std::size_t k) {
        LeviSystem levi = levi_root_system(rs, subsets[k]);
        for (auto& dp : enumerate_distinguished_parabolics(levi.system)) {
            LeviDatum datum{levi, std::move(dp)};
            Labels full = extend_levi_cocharacter(rs, datum);
            per_subset[k].push_back({dominantize(rs, full), std::move(datum)});
        }
    };
    if (jobs <= 1) {
        for (std::size_t k = 0; k < subsets.size(); ++k)
            work(k);
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t k = t; k < subsets.size(); k += jobs)
                    work(k);
            });
    }

    // first witness in (subset, J) lexicographic order wins
    std::map<std::vector<int>, Candidate> unique;
    for (auto& list : per_subset)
        for (auto& c : list)
            unique.try_emplace(as_key(c.diagram), std::move(c));

    std::vector<OrbitRecord> out;
    for (auto& [key, c] : unique) {
        if ((c.diagram.array() < 0).any() || (c.diagram.array() > 2).any())
            throw InternalError("enumerate_orbits: diagram " + to_string(c.diagram) + " outside {0,1,2}");
        OrbitRecord rec;
        rec.distinguished = static_cast<int>(c.datum.levi.subset.size()) == n && n > 0;
        rec.ht = height_J(c.datum.levi.system, c.datum.parabolic);
        rec.diagram = std::move(c.diagram);
        rec.datum = std::move(c.datum);
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace

Labels parabolic_labels(int rank, const IndexSet& J)
{
    Labels labels = Labels::Constant(rank, 2);
    for (int j : J)
        labels(j) = 0;
    return labels;
}

bool is_distinguished_subset(const RootSystem& rs, const IndexSet& J)
{
    const Labels labels = parabolic_labels(rs.rank(), J);
    int g0 = rs.rank();
    int g2 = 0;
    for (const auto& r : rs.positive_roots) {
        const int w = pairing(labels, r);
        if (w == 0)
            g0 += 2;
        else if (w == 2)
            ++g2;
    }
    return g0 == g2;
}

std::vector<DistParabolic> enumerate_distinguished_parabolics(const RootSystem& rs)
{
    // per-factor zero sets, then the cartesian combination
    std::vector<IndexSet> combos{IndexSet{}};
    for (int f = 0; f < rs.num_factors(); ++f) {
        std::vector<IndexSet> good;
        for (const auto& J : lex_subsets(rs.factor_nodes[f]))
            if (factor_distinguished(rs, f, parabolic_labels(rs.rank(), J)))
                good.push_back(J);
        std::vector<IndexSet> next;
        for (const auto& prefix : combos)
            for (const auto& J : good) {
                IndexSet merged = prefix;
                merged.insert(merged.end(), J.begin(), J.end());
                std::sort(merged.begin(), merged.end());
                next.push_back(std::move(merged));
            }
        combos = std::move(next);
    }
    std::sort(combos.begin(), combos.end());

    std::vector<DistParabolic> out;
    for (auto& J : combos) {
        Labels labels = parabolic_labels(rs.rank(), J);
        out.push_back({std::move(J), std::move(labels)});
    }
    return out;
}

LeviSystem levi_root_system(const RootSystem& rs, const IndexSet& subset)
{
    IndexSet sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    const int m = static_cast<int>(sorted.size());
    IntMatrix sub(m, m);
    for (int a = 0; a < m; ++a) {
        if (sorted[a] < 0 || sorted[a] >= rs.rank())
            throw DomainError("levi_root_system: node " + std::to_string(sorted[a]) + " out of range");
        for (int b = 0; b < m; ++b)
            sub(a, b) = rs.cartan(sorted[a], sorted[b]);
    }
    return {sorted, root_system_from_cartan(sub, {})};
}

Labels extend_levi_cocharacter(const RootSystem& rs, const LeviDatum& datum)
{
    const IndexSet& S = datum.levi.subset;
    const int m = static_cast<int>(S.size());
    MatrixX<Rational> a(m, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            a(r, c) = Rational(rs.cartan(S[c], S[r])); // transposed Levi Cartan
    const VectorX<Rational> coeffs = solve_exact<Rational>(a, datum.parabolic.labels.cast<Rational>());

    VectorX<Rational> full = VectorX<Rational>::Zero(rs.rank());
    for (int k = 0; k < m; ++k)
        full += coeffs(k) * rs.cartan.row(S[k]).transpose().cast<Rational>();
    return require_integral(full, "extend_levi_cocharacter");
}

std::vector<int> height_J(const RootSystem& system, const DistParabolic& dp)
{
    std::vector<int> out;
    for (int f = 0; f < system.num_factors(); ++f) {
        int h = 0;
        for (int node : system.factor_nodes[f])
            if (std::find(dp.J.begin(), dp.J.end(), node) == dp.J.end())
                h += system.highest_roots[f].coeffs(node);
        out.push_back(h);
    }
    return out;
}

std::vector<OrbitRecord> enumerate_orbits(const RootSystem& rs, int jobs)
{
    std::vector<OrbitRecord> combined;
    if (rs.num_factors() <= 1) {
        combined = enumerate_simple(rs, jobs);
    } else {
        // cartesian product of factor catalogues
        struct Partial {
            IntVector diagram;
            IndexSet subset;
            IndexSet J_global;
            std::vector<int> ht;
        };
        std::vector<Partial> partials{{IntVector(0), {}, {}, {}}};
        int offset = 0;
        for (int f = 0; f < rs.num_factors(); ++f) {
            const SimpleFactor& factor = rs.spec.factors[f];
            const RootSystem frs = build_root_system(GroupSpec{{factor}, 0});
            const auto cat = enumerate_simple(frs, jobs);
            std::vector<Partial> next;
            for (const auto& p : partials)
                for (const auto& rec : cat) {
                    Partial q = p;
                    IntVector d(p.diagram.size() + rec.diagram.size());
                    d << p.diagram, rec.diagram;
                    q.diagram = d;
                    for (int s : rec.datum.levi.subset)
                        q.subset.push_back(s + offset);
                    for (int j : rec.datum.parabolic.J)
                        q.J_global.push_back(rec.datum.levi.subset[j] + offset);
                    q.ht.insert(q.ht.end(), rec.ht.begin(), rec.ht.end());
                    next.push_back(std::move(q));
                }
            partials = std::move(next);
            offset += factor.rank;
        }
        for (auto& p : partials) {
            OrbitRecord rec;
            rec.datum.levi = levi_root_system(rs, p.subset);
            IndexSet J_local;
            for (int g : p.J_global)
                J_local.push_back(static_cast<int>(
                    std::lower_bound(p.subset.begin(), p.subset.end(), g) - p.subset.begin()));
            rec.datum.parabolic = {J_local, parabolic_labels(static_cast<int>(p.subset.size()), J_local)};
            rec.diagram = std::move(p.diagram);
            rec.distinguished = static_cast<int>(p.subset.size()) == rs.rank();
            rec.ht = std::move(p.ht);
            combined.push_back(std::move(rec));
        }
    }

    for (auto& rec : combined) {
        rec.dim_g0 = graded_dimension(rs, rec.diagram, 0);
        rec.dim_g1 = graded_dimension(rs, rec.diagram, 1);
        rec.name = bala_carter_name(rs.spec, rec.diagram);
    }
    std::sort(combined.begin(), combined.end(),
              [](const OrbitRecord& a, const OrbitRecord& b) { return as_key(a.diagram) < as_key(b.diagram); });
    return combined;
}

namespace {

// Weyl orbits of the fundamental weights with at most `cap` elements, in
// simple-root coordinates scaled by a common denominator.
std::vector<std::vector<IntVector>> small_weight_orbits(const RootSystem& rs, std::size_t cap)
{
    const int n = rs.rank();
    const MatrixX<Rational> to_roots = rs.cartan.cast<Rational>();
    std::vector<std::vector<IntVector>> out;
    for (int i = 0; i < n; ++i) {
        // Weyl orbit of the i-th fundamental weight in fundamental-weight
        // coordinates: s_k(mu)_j = mu_j - mu_k <alpha_k, alpha_j^vee>
        std::set<std::vector<int>> seen;
        IntVector start = IntVector::Zero(n);
        start(i) = 1;
        std::vector<IntVector> queue{start};
        seen.insert(as_key(start));
        for (std::size_t head = 0; head < queue.size() && queue.size() <= cap; ++head)
            for (int k = 0; k < n; ++k) {
                if (queue[head](k) == 0)
                    continue;
                IntVector next = queue[head] - queue[head](k) * rs.cartan.col(k);
                if (seen.insert(as_key(next)).second)
                    queue.push_back(next);
            }
        if (queue.size() > cap)
            continue;
        std::vector<VectorX<Rational>> exact;
        std::int64_t denom = 1;
        for (const auto& mu : queue) {
            exact.push_back(solve_exact<Rational>(to_roots, mu.cast<Rational>()));
            for (const auto& x : exact.back())
                denom = std::lcm(denom, x.denominator());
        }
        std::vector<IntVector> orbit;
        for (const auto& x : exact)
            orbit.push_back(require_integral(x * Rational(denom), "small_weight_orbits"));
        out.push_back(std::move(orbit));
    }
    return out;
}

} // namespace

std::size_t count_orbits_by_invariants(const RootSystem& rs)
{
    // Keys are built from the extended, not yet dominant, cocharacter and
    // only use Weyl-invariant data: the adjoint grading plus the pairing
    // multisets against small fundamental-weight orbits.
    auto key_set = [](const RootSystem& sys) {
        const auto orbits = small_weight_orbits(sys, 2500);
        using Key = std::pair<std::map<int, int>, std::vector<std::vector<int>>>;
        std::set<Key> out;
        IndexSet all(sys.rank());
        for (int i = 0; i < sys.rank(); ++i)
            all[i] = i;
        for (const auto& S : lex_subsets(all)) {
            LeviSystem levi = levi_root_system(sys, S);
            for (auto& dp : enumerate_distinguished_parabolics(levi.system)) {
                const Labels full = extend_levi_cocharacter(sys, LeviDatum{levi, dp});
                Key key{graded_dimensions(sys, full), {}};
                for (const auto& orbit : orbits) {
                    std::vector<int> values;
                    for (const auto& mu : orbit)
                        values.push_back(full.dot(mu));
                    std::sort(values.begin(), values.end());
                    key.second.push_back(std::move(values));
                }
                out.insert(std::move(key));
            }
        }
        return out.size();
    };
    if (rs.num_factors() <= 1)
        return key_set(rs);
    std::size_t product = 1;
    for (const auto& f : rs.spec.factors)
        product *= key_set(build_root_system(GroupSpec{{f}, 0}));
    return product;
}

} // namespace unipotent
