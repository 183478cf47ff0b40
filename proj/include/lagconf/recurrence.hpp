#pragma once

#include <string>
#include <vector>

#include "lagconf/rational.hpp"

namespace lagconf {

/**
 * Finite window model of a translation-invariant edge coloring of the
 * complete graph on the vertices 0..N: the edge (i, j) is red iff |i - j|
 * lies in D, blue otherwise.
 */
struct DifferenceSet {
    std::vector<int> elements;  // sorted subset of [1, N]
    int N = 0;
};

/** Validate and normalize (sort, dedupe) a difference set. */
DifferenceSet make_difference_set(std::vector<int> elements, int N);

/** Rigid rotation x -> x + alpha mod 1 with the window Lambda = [0, r). */
struct RotationModel {
    double alpha = 0.0;
    double r = 0.0;
};

/**
 * True iff some `size` vertices in [0, N] have all pairwise differences in D
 * (a red clique). Requires size >= 2.
 */
bool has_delta_clique(const DifferenceSet& d, int size);

/** Blue neighbors of 0 in the window: {n in [1, N] : n not in D}. */
std::vector<int> recurrence_set(const DifferenceSet& d);

/**
 * Lexicographically smallest maximum red clique on the vertices 0..N,
 * as a sorted vertex list (always nonempty: {0} is a clique).
 */
std::vector<int> maximum_clique(const DifferenceSet& d);

/**
 * Counting check behind the density bound: with Q the reported maximum red
 * clique and q = max(Q), the window [0, mk] must contain at least m - q blue
 * neighbors of 0, and the blue-degree argument (m-1)k + 1 <= d*k must hold.
 */
struct DensityReport {
    int k = 0;
    int m = 0;
    std::vector<std::string> precondition_failures;  // empty when all hold
    std::vector<int> clique;                         // lex-smallest maximum red clique
    int q = 0;                                       // max element of the clique
    int max_blue_degree = 0;  // max blue degree over the clique inside [0, mk]
    bool degree_bound_ok = false;
    long long blue_count = 0;  // |{n in [1, mk] : n not in D}|
    bool inequality_holds = false;  // blue_count >= m - q
    bool strengthened_ok = false;   // prefix windows: |R cap [1,n]| >= floor(n/k) - q
    bool ok() const {
        return precondition_failures.empty() && degree_bound_ok && inequality_holds &&
               strengthened_ok;
    }
};
DensityReport density_bound_check(const DifferenceSet& d, int k, int m);

/**
 * Exhaustive scan of all D subsets of [1, N] without a red clique on k+1
 * vertices; reports the minimum complement density (N - max|D|)/N and the
 * smallest-bitmask witness attaining it.
 */
struct EnumReport {
    Rational min_density;
    DifferenceSet witness;
    int max_size = 0;          // largest clique-free |D|
    long long clique_free = 0; // number of clique-free subsets
    bool bound_ok = false;     // min_density >= 1/k - k/N
    bool all_counts_hold = true;  // density_bound_check inequality over all instances
};
EnumReport enumerate_and_verify(int k, int N, bool check_each = false);

/** Orbit statistics of the rotation window: R = {n <= N : ||n*alpha|| < r}. */
struct RotationReport {
    long long count = 0;
    double density = 0.0;
    int k = 0;            // floor(1/r)
    bool bound_ok = false;  // density >= 1/k - k/N
};
RotationReport rotation_densities(const RotationModel& model, long long N);

}  // namespace lagconf
