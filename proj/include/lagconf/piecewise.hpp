#pragma once

#include <string>
#include <vector>

#include "lagconf/rational.hpp"

namespace lagconf {

/** Polynomial helpers over exact rational coefficients (ascending degree). */
using Poly = std::vector<Rational>;

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rational& s);
/** p(alpha + beta * x). */
Poly poly_compose_linear(const Poly& p, const Rational& alpha, const Rational& beta);
Rational poly_eval(const Poly& p, const Rational& x);
double poly_eval(const Poly& p, double x);

/**
 * Continuous piecewise polynomial on a rational interval, exact coefficients.
 * Pieces form a contiguous ascending partition of [domain_lo, domain_hi] and
 * adjacent pieces agree at the shared breakpoint.
 */
class PiecewisePoly {
  public:
    struct Piece {
        Rational lo, hi;
        Poly coeffs;
    };

    PiecewisePoly() = default;
    /** Validates partition contiguity and continuity at internal breakpoints. */
    PiecewisePoly(std::vector<Piece> pieces);

    static PiecewisePoly constant(const Rational& c, const Rational& lo, const Rational& hi);
    static PiecewisePoly zero(const Rational& lo, const Rational& hi);
    /**
     * Polynomial on [a,b] extended by zero to [lo,hi]; the polynomial must
     * vanish at any internal junction with the zero extension.
     */
    static PiecewisePoly from_poly(const Poly& p, const Rational& a, const Rational& b,
                                   const Rational& lo, const Rational& hi);
    /**
     * Assemble from possibly non-adjacent pieces inside [lo,hi]; gaps are
     * filled with zero; continuity is validated.
     */
    static PiecewisePoly assemble(std::vector<Piece> pieces, const Rational& lo,
                                  const Rational& hi);

    const std::vector<Piece>& pieces() const { return pieces_; }
    Rational domain_lo() const { return pieces_.front().lo; }
    Rational domain_hi() const { return pieces_.back().hi; }

    Rational eval(const Rational& x) const;
    double eval_d(double x) const;

    /** Exact integral over the whole domain. */
    Rational integral() const;
    /** Exact integral over [a,b] (must lie inside the domain). */
    Rational integral(const Rational& a, const Rational& b) const;

    PiecewisePoly plus(const PiecewisePoly& other) const;
    PiecewisePoly minus(const PiecewisePoly& other) const;
    PiecewisePoly scaled(const Rational& s) const;
    PiecewisePoly plus_const(const Rational& c) const;
    /** Reflection x -> -x (domain must be symmetric about 0). */
    PiecewisePoly reflected() const;

    bool operator==(const PiecewisePoly& other) const;
    bool is_zero() const;
    /** True when every piece overlapping the complement of (a,b) is zero. */
    bool supported_in(const Rational& a, const Rational& b) const;
    /** Smallest s >= 0 with support inside [-s, s] (domain symmetric usage). */
    Rational support_radius() const;

    /** Numeric max of the function over [a,b] (derivative root isolation). */
    double max_on(double a, double b) const;
    /** Location and value of the max over [a,b]. */
    std::pair<double, double> argmax_on(double a, double b) const;
    double max_abs() const;

  private:
    std::vector<Piece> pieces_;
    void validate() const;
};

/** Cubic-smoothstep ramp from (x0, y0) to (x1, y1): C^1, flat at both ends. */
PiecewisePoly::Piece smoothstep_piece(const Rational& x0, const Rational& x1, const Rational& y0,
                                      const Rational& y1);

/**
 * C^1 bump: support [center-width, center+width], smoothstep up on the left
 * half and down on the right half, peak value `height` at `center`.
 */
PiecewisePoly bump_profile(const Rational& center, const Rational& width, const Rational& height,
                           const Rational& lo, const Rational& hi);

}  // namespace lagconf
