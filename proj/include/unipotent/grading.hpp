#pragma once

#include "unipotent/rootsystem.hpp"

#include <map>

namespace unipotent {

/// <lambda, beta> for a root beta = sum m_i alpha_i.
int pairing(const Labels& labels, const IntVector& root_coeffs);
int pairing(const Labels& labels, const Root& root);

/// dim g(j, lambda): roots of both signs pairing to j, plus the Cartan
/// subalgebra (semisimple rank + torus rank) at j = 0.
int graded_dimension(const RootSystem& rs, const Labels& labels, int j);

/// All nonzero graded pieces, keyed by degree.
std::map<int, int> graded_dimensions(const RootSystem& rs, const Labels& labels);

/// omega_G: the largest weight of lambda on Lie(G); 0 if there are no roots.
int highest_lambda_weight(const RootSystem& rs, const Labels& labels);

Labels coords_to_labels(const RootSystem& rs, const CoweightCoords& coords);
CoweightCoords labels_to_coords(const RootSystem& rs, const Labels& labels);

inline bool is_dominant(const Labels& labels) { return (labels.array() >= 0).all(); }
inline bool is_even(const Labels& labels) { return (labels.array().unaryExpr([](int v) { return v % 2; }) == 0).all(); }

/// Simple reflection s_i acting on a cocharacter, in label coordinates.
Labels reflect(const RootSystem& rs, const Labels& labels, int i);

/// The dominant representative of the Weyl orbit, reflecting at the
/// lowest-index negative label each step. Throws InternalError if the walk
/// exceeds |positive roots| steps.
Labels dominantize(const RootSystem& rs, const Labels& labels);
Labels dominantize(const RootSystem& rs, const CoweightCoords& coords);

} // namespace unipotent
