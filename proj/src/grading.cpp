#include "unipotent/grading.hpp"

#include <algorithm>

namespace unipotent {

int pairing(const Labels& labels, const IntVector& root_coeffs)
{
    if (labels.size() != root_coeffs.size())
        throw DomainError("pairing: labels have " + std::to_string(labels.size())
                          + " entries, root has " + std::to_string(root_coeffs.size()));
    return labels.dot(root_coeffs);
}

int pairing(const Labels& labels, const Root& root) { return pairing(labels, root.coeffs); }

int graded_dimension(const RootSystem& rs, const Labels& labels, int j)
{
    int dim = j == 0 ? rs.rank() + rs.spec.torus_rank : 0;
    for (const auto& r : rs.positive_roots) {
        const int w = pairing(labels, r);
        if (w == j)
            ++dim;
        if (-w == j)
            ++dim;
    }
    return dim;
}

std::map<int, int> graded_dimensions(const RootSystem& rs, const Labels& labels)
{
    std::map<int, int> dims;
    if (rs.rank() + rs.spec.torus_rank > 0)
        dims[0] = rs.rank() + rs.spec.torus_rank;
    for (const auto& r : rs.positive_roots) {
        const int w = pairing(labels, r);
        ++dims[w];
        ++dims[-w];
    }
    return dims;
}

int highest_lambda_weight(const RootSystem& rs, const Labels& labels)
{
    int best = 0;
    for (const auto& r : rs.positive_roots)
        best = std::max(best, std::abs(pairing(labels, r)));
    return best;
}

Labels coords_to_labels(const RootSystem& rs, const CoweightCoords& coords)
{
    const CoweightCoords labels = rs.cartan.transpose().cast<Rational>() * coords;
    return require_integral(labels, "coords_to_labels");
}

CoweightCoords labels_to_coords(const RootSystem& rs, const Labels& labels)
{
    return solve_exact<Rational>(rs.cartan.transpose().cast<Rational>(), labels.cast<Rational>());
}

Labels reflect(const RootSystem& rs, const Labels& labels, int i)
{
    // s_i(lambda) = lambda - <lambda, alpha_i> alpha_i^vee
    return labels - labels(i) * rs.cartan.row(i).transpose();
}

Labels dominantize(const RootSystem& rs, const Labels& labels)
{
    Labels cur = labels;
    const std::size_t cap = rs.positive_roots.size() + 1;
    for (std::size_t step = 0;; ++step) {
        Eigen::Index i = 0;
        while (i < cur.size() && cur(i) >= 0)
            ++i;
        if (i == cur.size())
            return cur;
        if (step >= cap)
            throw InternalError("dominantize: reflection walk exceeded " + std::to_string(cap) + " steps");
        cur = reflect(rs, cur, static_cast<int>(i));
    }
}

Labels dominantize(const RootSystem& rs, const CoweightCoords& coords)
{
    return dominantize(rs, coords_to_labels(rs, coords));
}

} // namespace unipotent
