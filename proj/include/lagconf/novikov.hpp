#pragma once

#include <complex>
#include <vector>

#include "lagconf/rational.hpp"

namespace lagconf {

using Complex = std::complex<double>;

/** Coefficients with modulus below this are pruned from series. */
inline constexpr double kZeroTolerance = 1e-12;

/**
 * NovikovScalar: a finite truncated series sum a_j T^{kappa_j} with exact
 * rational exponents kappa_j (strictly increasing) and complex coefficients.
 * `order` is the truncation order: the value is known modulo T^order. An
 * empty order means the element is exact (known to all orders).
 */
class NovikovScalar {
  public:
    struct Term {
        Rational exp;
        Complex coeff;
    };

    NovikovScalar() = default;
    NovikovScalar(std::vector<Term> terms, OrderBound order);

    /** The constant c = c * T^0. */
    static NovikovScalar constant(Complex c);
    /** c * T^e. */
    static NovikovScalar monomial(Complex c, const Rational& e);
    static NovikovScalar zero() { return NovikovScalar(); }
    static NovikovScalar one() { return constant(1.0); }

    const std::vector<Term>& terms() const { return terms_; }
    const OrderBound& order() const { return order_; }

    bool is_zero() const { return terms_.empty(); }

    /** Valuation: min exponent with nonzero coefficient; empty for 0 (= +infinity). */
    OrderBound val() const;

    /** Leading coefficient (at the valuation exponent); 0 for the zero element. */
    Complex leading_coeff() const { return terms_.empty() ? Complex(0) : terms_.front().coeff; }

    /** Coefficient of T^e (0 if absent). */
    Complex coeff_at(const Rational& e) const;

    NovikovScalar truncated(const Rational& new_order) const;
    NovikovScalar scaled(Complex c) const;
    /** Multiply by T^e (shift all exponents). */
    NovikovScalar shifted(const Rational& e) const;

    /** Evaluate at T = t (numeric substitution). */
    Complex eval(double t) const;

    /** Equality modulo T^g with coefficient tolerance. */
    bool equiv_mod(const NovikovScalar& other, const Rational& g, double tol = kZeroTolerance) const;

    friend NovikovScalar ns_add(const NovikovScalar& x, const NovikovScalar& y);
    friend NovikovScalar ns_mul(const NovikovScalar& x, const NovikovScalar& y);

  private:
    std::vector<Term> terms_;
    OrderBound order_;  // empty = +infinity (exact)
    void normalize();
};

NovikovScalar ns_add(const NovikovScalar& x, const NovikovScalar& y);
NovikovScalar ns_sub(const NovikovScalar& x, const NovikovScalar& y);
NovikovScalar ns_mul(const NovikovScalar& x, const NovikovScalar& y);

/** Inverse modulo T^order. Throws for the zero element. */
NovikovScalar ns_invert(const NovikovScalar& x, const Rational& order);

/** exp(x) modulo T^order for x of valuation >= 0; exp(R0 + R+) = exp(R0) * sum R+^n / n!. */
NovikovScalar ns_exp(const NovikovScalar& x, const Rational& order);

/** Integer power (negative exponents via ns_invert at the given order). */
NovikovScalar ns_pow(const NovikovScalar& x, long long n, const Rational& order);

/**
 * GappedMonoid: additive submonoid of the non-negative rationals given by
 * finitely many positive generators; enumeration below any cutoff is finite.
 */
struct GappedMonoid {
    std::vector<Rational> generators;

    explicit GappedMonoid(std::vector<Rational> gens = {});

    /** All elements <= cutoff, sorted ascending, starting with 0. */
    std::vector<Rational> enumerate(const Rational& cutoff) const;
};

}  // namespace lagconf
