#include "lagconf/hofer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lagconf {

namespace {

const Rational kHalf(1, 2);

void require_standard_domain(const RadialProfile& h, const char* who) {
    if (h.pieces().empty() || h.domain_lo() != -kHalf || h.domain_hi() != kHalf)
        throw std::invalid_argument(std::string(who) + ": profile domain must be [-1/2, 1/2]");
}

void require_even(const RadialProfile& h, const char* who) {
    if (!(h.reflected() == h))
        throw std::invalid_argument(std::string(who) + ": profile must be even in z");
}

Poly fold_negate(const Poly& p, const Rational& alpha) {
    // x -> -p(alpha - x)
    return poly_scale(poly_compose_linear(p, alpha, Rational(-1)), Rational(-1));
}

/** Default area parameter for the second factor: midpoint of (0, B - C). */
Rational half_gap(const Rational& B, const Rational& C) { return (B - C) / 2; }

}  // namespace

RadialProfile h_sharp(const RadialProfile& h, const Rational& b) {
    require_standard_domain(h, "h_sharp");
    require_even(h, "h_sharp");
    if (!(b > 0) || !(b < Rational(1, 6)))
        throw std::invalid_argument("h_sharp: need 0 < b < 1/6");
    if (!h.supported_in(-b, b))
        throw std::invalid_argument("h_sharp: profile must be supported in (-b, b)");

    std::vector<PiecewisePoly::Piece> parts;
    for (const auto& pc : h.pieces()) {
        if (pc.coeffs.empty()) continue;
        // Central copy.
        parts.push_back(pc);
        // Fold of the right half onto (1/2-b, 1/2]: x -> -h(1/2 - x).
        Rational l = std::max(pc.lo, Rational(0)), u = std::min(pc.hi, b);
        if (l < u) parts.push_back({kHalf - u, kHalf - l, fold_negate(pc.coeffs, kHalf)});
        // Fold of the left half onto [-1/2, -1/2+b): x -> -h(-1/2 - x).
        l = std::max(pc.lo, -b);
        u = std::min(pc.hi, Rational(0));
        if (l < u) parts.push_back({-kHalf - u, -kHalf - l, fold_negate(pc.coeffs, -kHalf)});
    }
    PiecewisePoly out = PiecewisePoly::assemble(std::move(parts), -kHalf, kHalf);
    if (out.integral() != 0) throw std::logic_error("h_sharp: fold lost the zero mean");
    return out;
}

FlatBoundReport flat_lower_bound(const RadialProfile& h, const Rational& a, int approximants,
                                 long long max_denominator) {
    require_standard_domain(h, "flat_lower_bound");
    require_even(h, "flat_lower_bound");
    if (approximants < 1) throw std::invalid_argument("flat_lower_bound: need approximants >= 1");
    if (max_denominator < 2)
        throw std::invalid_argument("flat_lower_bound: need max_denominator >= 2");
    const Rational b = h.support_radius();
    if (b == 0) throw std::invalid_argument("flat_lower_bound: profile is identically zero");
    if (!(b < Rational(1, 6)))
        throw std::invalid_argument("flat_lower_bound: support radius must be below 1/6");
    const Rational a_cap = kHalf - 3 * b;
    if (!(a > 0) || !(a < a_cap))
        throw std::invalid_argument(
            "flat_lower_bound: need 0 < a < 1/2 - 3b so every sampled configuration is valid");

    const RadialProfile hs = h_sharp(h, b);
    const auto [x0, peak] = h.argmax_on(0.0, to_double(b));
    (void)peak;

    FlatBoundReport rep;
    rep.x0 = x0;
    rep.bound = 0;
    rep.best_x = 0;

    const double q_lo = 8.0;
    for (int j = 0; j < approximants; ++j) {
        double tpos = approximants == 1 ? 1.0 : static_cast<double>(j) / (approximants - 1);
        long long q = static_cast<long long>(
            std::llround(q_lo * std::pow(static_cast<double>(max_denominator) / q_lo, tpos)));
        q = std::max<long long>(2, std::min(q, max_denominator));
        long long p = std::llround(x0 * static_cast<double>(q));
        if (p < 1) p = 1;
        Rational x(p, q);
        while (p > 0 && !(x < b)) {
            --p;
            x = Rational(p, q);
        }
        if (p < 1) {
            // Denominator too coarse to land inside (0, b); keep the running sup.
            rep.bounds_by_approximant.push_back(rep.bound);
            continue;
        }
        LinkConfig cfg = make_config(2, kHalf - x, a);
        Rational val = zeta0(cfg, hs);
        if (val > rep.bound) {
            rep.bound = val;
            rep.best_x = x;
        }
        rep.bounds_by_approximant.push_back(rep.bound);
    }
    return rep;
}

RadialProfile h_r_delta(const Rational& r, const Rational& delta) {
    if (!(r > 0) || !(r < kHalf)) throw std::invalid_argument("h_r_delta: need 0 < r < 1/2");
    if (!(delta > 0)) throw std::invalid_argument("h_r_delta: need delta > 0");
    if (!(delta < r) || !(5 * delta < 1 - r))
        throw std::invalid_argument("h_r_delta: support [r-delta, r+5*delta] leaves [0, 1]");

    const Rational c = -kHalf + r;
    const Rational half_d = delta / 2;
    std::vector<PiecewisePoly::Piece> parts;
    // Positive unit bump with a plateau, C^1 ramps of width delta/2.
    parts.push_back(smoothstep_piece(c - delta, c - half_d, Rational(0), Rational(1)));
    parts.push_back({c - half_d, c + half_d, Poly{Rational(1)}});
    parts.push_back(smoothstep_piece(c + half_d, c + delta, Rational(1), Rational(0)));
    // Mirror image bump of height -1, placed by the point reflection about
    // c + 2*delta so the profile is odd there and the mean vanishes exactly.
    const Rational m2 = 2 * (c + 2 * delta);
    std::vector<PiecewisePoly::Piece> neg;
    for (const auto& pc : parts)
        neg.push_back({m2 - pc.hi, m2 - pc.lo, fold_negate(pc.coeffs, m2)});
    parts.insert(parts.end(), neg.begin(), neg.end());
    PiecewisePoly out = PiecewisePoly::assemble(std::move(parts), -kHalf, kHalf);
    if (out.integral() != 0) throw std::logic_error("h_r_delta: mean did not cancel");
    return out;
}

Rational sikorav_upper(int l, const Rational& support_area) {
    if (l < 1) throw std::invalid_argument("sikorav_upper: need l >= 1");
    if (!(support_area > 0)) throw std::invalid_argument("sikorav_upper: need positive area");
    if (Rational(l) * support_area > 1)
        throw std::domain_error("sikorav_upper: l disjoint copies of the support do not fit");
    return Rational(1, l);
}

URReport u_r(const Rational& r, const Rational& delta) {
    if (!(r > 0) || !(r < kHalf)) throw std::invalid_argument("u_r: need 0 < r < 1/2");
    const Integer kf = rational_floor(1 / r);
    const int k = kf.convert_to<int>();
    if (Rational(1, k) == r)
        throw std::invalid_argument("u_r: r must avoid the points 1/k (open condition)");
    if (k < 2) throw std::invalid_argument("u_r: need r < 1/2 with 1/(k+1) < r < 1/k, k >= 2");

    const Rational C = (1 - 2 * r) / (k - 1);
    if (!(delta > 0) || !(delta < C / 5))
        throw std::invalid_argument(
            "u_r: need 0 < delta < C/5 so the support stays clear of the next level");

    URReport rep;
    rep.k = k;
    const LinkConfig cfg = make_config(k, r, half_gap(r, C));
    const RadialProfile h = h_r_delta(r, delta);
    rep.lower = sigma_integral(cfg, h);
    rep.upper = sikorav_upper(k, 6 * delta);
    rep.sharp = rep.lower == rep.upper;
    return rep;
}

KerCalabiReport phi_k_flat(int k, const Rational& B, const RadialProfile& h) {
    if (k < 2) throw std::invalid_argument("phi_k_flat: need k >= 2");
    require_standard_domain(h, "phi_k_flat");
    const Rational lo_I = -kHalf + Rational(1, k + 1);
    const Rational hi_I = -kHalf + Rational(1, k);
    if (!(B > Rational(1, k + 1)) || !(B < Rational(1, k)))
        throw std::invalid_argument("phi_k_flat: need 1/(k+1) < B < 1/k");
    if (h.integral() != 0)
        throw std::invalid_argument("phi_k_flat: profile must have zero mean");
    if (!h.supported_in(lo_I, hi_I))
        throw std::invalid_argument("phi_k_flat: profile must be supported in the k-th window");

    const Rational C = (1 - 2 * B) / (k - 1);
    const LinkConfig cfg = make_config(k, B, half_gap(B, C));
    KerCalabiReport rep;
    rep.lower = Rational(k) * zeta0(cfg, h);  // = h(-1/2 + B): higher levels sit past the window
    rep.calabi = calabi_radial(h.scaled(Rational(k)));
    return rep;
}

BiLipschitzReport bilipschitz_constant(double rho_g, double d_g, int grid_n) {
    if (!(rho_g > 0) || !(d_g > 0))
        throw std::invalid_argument("bilipschitz_constant: need rho_g > 0 and d_g > 0");
    if (grid_n < 1) throw std::invalid_argument("bilipschitz_constant: need grid_n >= 1");
    BiLipschitzReport rep;
    rep.C2 = rho_g / (rho_g + d_g);
    double worst = std::numeric_limits<double>::infinity();
    for (int n = 0; n <= grid_n; ++n)
        worst = std::min(worst, std::max(1.0 - n * d_g, n * rho_g));
    rep.grid_verified = worst >= rep.C2 - 1e-12;
    return rep;
}

}  // namespace lagconf
