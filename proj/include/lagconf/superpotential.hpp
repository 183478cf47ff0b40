#pragma once

#include <map>
#include <vector>

#include "lagconf/configuration.hpp"
#include "lagconf/novikov.hpp"

namespace lagconf {

/**
 * Laurent polynomial in 2k variables over NovikovScalar coefficients.
 * Variable v in [0, k) is p_v; variable k + i is q_i. Monomial keys are
 * integer exponent vectors of length 2k; zero coefficients are not stored.
 */
struct LaurentPoly {
    int vars = 0;
    std::map<std::vector<int>, NovikovScalar> terms;
};

LaurentPoly lp_zero(int vars);
void lp_add_term(LaurentPoly& P, const std::vector<int>& mono, const NovikovScalar& coeff);
LaurentPoly lp_add(const LaurentPoly& x, const LaurentPoly& y);
LaurentPoly lp_mul(const LaurentPoly& x, const LaurentPoly& y);

/**
 * Substitute series values for the variables. Negative powers invert at
 * truncation order pow_order, so every substituted value with a negative
 * exponent must have valuation 0.
 */
NovikovScalar lp_eval(const LaurentPoly& P, const std::vector<NovikovScalar>& at,
                      const Rational& pow_order);

/** Substitute T = t and complex values for the variables. */
Complex lp_eval_numeric(const LaurentPoly& P, const std::vector<Complex>& at, double t);

/** Formal partial derivatives, indexed like the variables (p's then q's). */
std::vector<LaurentPoly> grad(const LaurentPoly& W);

/** Tridiagonal matrix with 2 on the diagonal and -1 off it. */
std::vector<std::vector<int>> cartan_matrix(int k);

/**
 * Eigenvalues 2 - 2*cos(j*pi/(k+1)), j = 1..k, ascending: the closed form
 * for this positive-definite Toeplitz tridiagonal family.
 */
std::vector<double> cartan_eigenvalues(int k);

/** Dense numeric eigensolve of cartan_matrix(k), ascending (oracle). */
std::vector<double> cartan_eigenvalues_numeric(int k);

/** Normalization scalar sqrt(2) * T^{(B-C-a)/2}. */
NovikovScalar beta_orb(const LinkConfig& c);

struct SuperpotentialData {
    LinkConfig config;
    std::vector<int> signs;  // k-1 entries in {+1, -1}
    NovikovScalar beta;      // positive valuation (or zero)
    NovikovScalar beta_orb;
    LaurentPoly W;      // smooth part + sign-weighted mixed part + hot part
    LaurentPoly W_hot;  // extra user-supplied terms (empty by default)
};

/**
 * Assemble the potential for the configuration: the q-part T^a sum(q_i +
 * q_i^{-1}), the p-part exp(beta) sum(T^{(k-1-i)C+B} p_i + T^{iC+B}
 * p_i^{-1}), and the mixed part T^B sum_i signs[i] p_{i+1}^{-1} p_i
 * (q_{i+1} + q_i^{-1})/2. A nonzero beta must carry a finite truncation
 * order (exp(beta) is expanded to that order).
 */
SuperpotentialData build_superpotential(const LinkConfig& c, const std::vector<int>& signs,
                                        const NovikovScalar& beta,
                                        const LaurentPoly* W_hot = nullptr);

struct CriticalPoint {
    std::vector<NovikovScalar> p, q;  // k entries each, valuation 0
    Rational solved_order;            // exponent depth the point is solved to
    /** Valuations of grad(W) at the point, indexed like grad; empty = +infinity. */
    std::vector<OrderBound> residual_valuations;
};

/**
 * Branch choice for the closed-form point: zeta runs over the k+1 roots
 * (root_index picks one, 0 = principal), and the q's take the uniform
 * value +1 or -1.
 */
struct LeadingBranch {
    int root_index = 0;  // 0..k
    bool q_negative = false;
};

/**
 * Closed-form lowest-order critical point: q_i uniform, p_i = tau_{i-1} *
 * zeta^{i+1} with tau_j a running product of the effective signs and
 * zeta^{k+1} = tau_{k-2}. The construction is certified symbolically (exact
 * root-of-unity arithmetic), never by floating-point cancellation.
 */
CriticalPoint leading_solution(const LinkConfig& c, const std::vector<int>& signs,
                               const LeadingBranch& branch = {});

/** The symbolic certificate used by leading_solution, exposed for tests. */
bool leading_solution_exact(const LinkConfig& c, const std::vector<int>& signs,
                            const LeadingBranch& branch = {});

/**
 * Exponent monoid for the refinement: generated by the positive shifts
 * g - a and g - B of the elements g of the base monoid generated by
 * {a, B, C, (B-C-a)/2} (elements above the working depth are dropped).
 */
GappedMonoid refinement_monoid(const LinkConfig& c, const Rational& g_max);

/**
 * Order-by-order refinement q_i = q_i(0)*exp(Q_i), p_i = p_i(0)*exp(P_i)
 * with P, Q supported on refinement_monoid(c, g_max): at each monoid level g
 * the q-corrections kill the T^{a+g} residual coefficients and a tridiagonal
 * solve kills the T^{B+g} coefficients. Throws if a residual sits off the
 * expected exponent ladder (it then cannot improve at its level).
 */
CriticalPoint refine_critical_point(const SuperpotentialData& S, const CriticalPoint& start,
                                    const Rational& g_max);

/**
 * Independent check: substitute T = t into W and run damped Newton in
 * C^{2k} from the leading solution on the given branch until the gradient
 * norm is below 1e-10. Returns the 2k coordinates (p's then q's).
 */
std::vector<Complex> solve_numeric_oracle(const SuperpotentialData& S, double t,
                                          const LeadingBranch& branch = {});

/**
 * True iff r_i/r_j < rho_i/rho_j for all i < j AND no pair of nonzero
 * integer vectors alpha, beta with entries bounded by coeff_bound satisfies
 * sum alpha_i r_i = sum beta_i rho_i within 1e-9. The relation search is
 * exhaustive (meet in the middle) for k <= 3 and lattice-reduction based
 * (heuristic) for larger k.
 */
bool check_nonresonance(const std::vector<double>& r, const std::vector<double>& rho,
                        long long coeff_bound);

/** Relation-search half of check_nonresonance, exposed for diagnostics. */
bool has_integer_relation(const std::vector<double>& r, const std::vector<double>& rho,
                          long long coeff_bound);

}  // namespace lagconf
