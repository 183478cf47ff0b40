#pragma once

#include "lagconf/estimators.hpp"

namespace lagconf {

/**
 * Fold an even profile h supported in (-b, b), b < 1/6, into the zero-mean
 * even profile h#: h# = h on (-b, b), h#(x) = -h(1/2 - x) on (1/2-b, 1/2],
 * h#(x) = -h(-1/2 - x) on [-1/2, -1/2+b), zero elsewhere.
 */
RadialProfile h_sharp(const RadialProfile& h, const Rational& b);

/**
 * Hofer-distance lower bound for the time-one map of h#(z): locate the max
 * of h at x0 in [0, b), run rational approximants x_i -> x0 with denominators
 * growing to max_denominator, and return sup_i of the two-circle estimator
 * value at B_i = 1/2 - x_i, which equals h(x_i).
 */
struct FlatBoundReport {
    double x0;                 // located argmax
    Rational bound;            // sup over approximants
    Rational best_x;           // approximant achieving the sup
    std::vector<Rational> bounds_by_approximant;
};
FlatBoundReport flat_lower_bound(const RadialProfile& h, const Rational& a, int approximants,
                                 long long max_denominator = 10000);

/**
 * Zero-mean C^1 test profile for the asymptotic norm: value 1 at the circle
 * level -1/2+r, supported in [-1/2+r-delta, -1/2+r+5*delta], odd about the
 * midpoint -1/2+r+2*delta, sup norm 1.
 */
RadialProfile h_r_delta(const Rational& r, const Rational& delta);

/** Packing upper bound 1/l, valid when l copies of the support fit by area. */
Rational sikorav_upper(int l, const Rational& support_area);

/** Two-sided asymptotic-norm computation at r in (1/(k+1), 1/k). */
struct URReport {
    int k;
    Rational lower;
    Rational upper;
    bool sharp;  // lower == upper
};
URReport u_r(const Rational& r, const Rational& delta);

/**
 * Flat in the kernel of Calabi: for zero-mean h supported in
 * I_k = (-1/2+1/(k+1), -1/2+1/k) and B in that interval, the scaled
 * Hamiltonian k*h(z) has estimator lower bound sum_j h(z_j) = h(-1/2+B)
 * and Calabi invariant k * integral h = 0.
 */
struct KerCalabiReport {
    Rational lower;
    Rational calabi;
};
KerCalabiReport phi_k_flat(int k, const Rational& B, const RadialProfile& h);

/**
 * Bi-Lipschitz constant C2 = rho_g / (rho_g + d_g), with a brute-force check
 * that min over integer n >= 0 of max(1 - n*d_g, n*rho_g) >= C2.
 */
struct BiLipschitzReport {
    double C2;
    bool grid_verified;
};
BiLipschitzReport bilipschitz_constant(double rho_g, double d_g, int grid_n = 10000);

}  // namespace lagconf
