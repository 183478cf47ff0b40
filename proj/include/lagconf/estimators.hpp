#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lagconf/configuration.hpp"
#include "lagconf/piecewise.hpp"

namespace lagconf {

/** Radial profile h on [-1/2, 1/2]; the Hamiltonian it encodes is h(z). */
using RadialProfile = PiecewisePoly;

/** Validate the domain [-1/2, 1/2] and return the argument. */
RadialProfile make_radial(PiecewisePoly p);

/** Time-dependent radial Hamiltonian: finite sum of time_factor(t) * profile(z). */
struct TimeDepRadial {
    struct Term {
        PiecewisePoly time_factor;  // piecewise polynomial on [0, 1]
        RadialProfile profile;
    };
    std::vector<Term> terms;
};

enum class EstimatorKind { c0, zeta0, mu0, tau };

struct EstimatorValue {
    Rational value;
    LinkConfig config;
    EstimatorKind kind;
};

/** Spectral estimator on an autonomous radial Hamiltonian: (1/k) sum_j h(z_j). */
Rational zeta0(const LinkConfig& c, const RadialProfile& h);

/** Time-dependent value: (1/k) sum_j integral_0^1 H(t, z_j) dt, exact. */
Rational c0_timedep(const LinkConfig& c, const TimeDepRadial& H);

/** Homogenized value; on autonomous radial Hamiltonians it equals zeta0. */
Rational mu0(const LinkConfig& c, const RadialProfile& h);

/**
 * Difference of two estimator values; (kp, Bp) = (1, 1/2) gives the equator
 * reference: (1/k) sum_j h(z_j) - h(0).
 */
Rational tau(int k, const Rational& B, int kp, const Rational& Bp, const RadialProfile& h);

/** Integral of h against the level measure; equals zeta0 (asymptotic-norm framing). */
Rational sigma_integral(const LinkConfig& c, const RadialProfile& h);

/** Calabi invariant of the radial Hamiltonian: integral of h over [-1/2, 1/2]. */
Rational calabi_radial(const RadialProfile& h);

/** Convergence study of tau_{k,B}(h) for k = 2..k_max against two closed forms. */
struct CalabiLimitReport {
    std::vector<std::pair<int, Rational>> table;  // sampled (k, tau_k)
    Rational candidate_integral;                  // int_0^{1/2-B} h
    Rational candidate_riemann;                   // candidate_integral / (1 - 2B)
    Rational empirical_limit;                     // 1/k-extrapolation from the largest samples
    double rate_constant;                         // max_k k * |tau_k - limit|
    double discrepancy_integral;
    double discrepancy_riemann;
    std::string matches;  // "integral", "riemann", or "neither"
};
CalabiLimitReport calabi_limit(const Rational& B, const RadialProfile& h, int k_max);

/** Deterministic pseudo-random C^1 bump-sum profiles for property suites. */
std::vector<RadialProfile> sample_profiles(int count, std::uint64_t seed);

/** Axiom test harness over a list of sample profiles. */
struct AxiomReport {
    int checks = 0;
    int failures = 0;
    std::vector<std::string> failure_notes;
    bool all_pass() const { return failures == 0; }
};
AxiomReport axiom_suite(const LinkConfig& c, const std::vector<RadialProfile>& samples);

}  // namespace lagconf
