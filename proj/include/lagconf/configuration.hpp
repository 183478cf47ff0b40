#pragma once

#include <vector>

#include "lagconf/rational.hpp"

namespace lagconf {

/**
 * Parameters of a configuration of k disjoint circles at equally spaced
 * levels on the unit-area sphere: the two caps have area B, the k-1 annuli
 * between consecutive circles have area C, so 2B + (k-1)C = 1. The second
 * factor carries the area parameter a. For k = 1 the single circle is the
 * equator (B = 1/2) and C is absent (stored as 0).
 */
struct LinkConfig {
    int k = 0;
    Rational B;
    Rational C;
    Rational a;
};

/** Uniform probability measure on the k circle levels z_1 < ... < z_k. */
struct LevelMeasure {
    std::vector<Rational> atoms;
    Rational weight;  // 1/k
};

/** Vertex-weighted tree (validation-only data type). */
struct WeightedTree {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<Rational> weights;
};

/**
 * Build and validate a configuration. For k >= 2, C = (1-2B)/(k-1) and the
 * constraints 0 < C < B and 0 < a < B - C must hold; for k = 1, B must be
 * 1/2 and 0 < a < B.
 */
LinkConfig make_config(int k, const Rational& B, const Rational& a);

/** Levels z_j = -1/2 + B + (j-1)C, j = 1..k, each with weight 1/k. */
LevelMeasure levels(const LinkConfig& c);

/**
 * Matching criterion for the linear chain of circles with cap weight B and
 * annulus weight C: holds iff B > C.
 */
bool linear_matching_property(int k, const Rational& B, const Rational& C);

/** Validate the WeightedTree invariants (connected acyclic, weights sum to 1). */
void validate_tree(const WeightedTree& t);

}  // namespace lagconf
