#include "lagconf/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace lagconf {

namespace {

const Rational kHalf(1, 2);

/** A valid second-factor area parameter for a config where only (k, B) matter. */
Rational default_a(int k, const Rational& B) {
    if (k == 1) return B / 2;
    const Rational C = (1 - 2 * B) / (k - 1);
    return (B - C) / 2;
}

}  // namespace

RadialProfile make_radial(PiecewisePoly p) {
    if (p.domain_lo() != -kHalf || p.domain_hi() != kHalf)
        throw std::invalid_argument("RadialProfile: domain must be [-1/2, 1/2]");
    return p;
}

Rational zeta0(const LinkConfig& c, const RadialProfile& h) {
    const LevelMeasure m = levels(c);
    Rational sum = 0;
    for (const Rational& z : m.atoms) sum += h.eval(z);
    return sum / c.k;
}

Rational c0_timedep(const LinkConfig& c, const TimeDepRadial& H) {
    Rational total = 0;
    for (const auto& term : H.terms) {
        if (term.time_factor.domain_lo() != 0 || term.time_factor.domain_hi() != 1)
            throw std::invalid_argument("c0_timedep: time factors live on [0, 1]");
        total += term.time_factor.integral() * zeta0(c, term.profile);
    }
    return total;
}

Rational mu0(const LinkConfig& c, const RadialProfile& h) {
    // Autonomous radial flows compose additively along levels, so the
    // homogenization limit is already attained at m = 1.
    return zeta0(c, h);
}

Rational tau(int k, const Rational& B, int kp, const Rational& Bp, const RadialProfile& h) {
    const Rational left = zeta0(make_config(k, B, default_a(k, B)), h);
    const Rational right = zeta0(make_config(kp, Bp, default_a(kp, Bp)), h);
    return left - right;
}

Rational sigma_integral(const LinkConfig& c, const RadialProfile& h) { return zeta0(c, h); }

Rational calabi_radial(const RadialProfile& h) { return h.integral(); }

CalabiLimitReport calabi_limit(const Rational& B, const RadialProfile& h, int k_max) {
    if (k_max < 3) throw std::invalid_argument("calabi_limit: k_max must be >= 3");
    for (const auto& pc : h.pieces())
        if (pc.lo < 0 && !pc.coeffs.empty())
            throw std::invalid_argument("calabi_limit: h must vanish on [-1/2, 0]");
    CalabiLimitReport rep;
    rep.candidate_integral = h.integral(Rational(0), kHalf - B);
    rep.candidate_riemann = rep.candidate_integral / (1 - 2 * B);

    std::vector<int> ks;
    for (int k = 2; k <= std::min(k_max, 128); ++k) ks.push_back(k);
    for (int k = 128; k < k_max; k = k * 3 / 2) ks.push_back(k);
    if (ks.back() != k_max) ks.push_back(k_max);
    // A second large sample for 1/k Richardson extrapolation.
    int k2 = k_max, k1 = std::max(2, k_max / 2);
    if (k1 >= k2) k1 = k2 - 1;
    if (std::find(ks.begin(), ks.end(), k1) == ks.end()) ks.push_back(k1);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

    for (int k : ks) rep.table.push_back({k, tau(k, B, 1, kHalf, h)});

    auto tau_at = [&](int k) {
        for (const auto& [kk, v] : rep.table)
            if (kk == k) return v;
        throw std::logic_error("calabi_limit: sample missing");
    };
    // tau_k = L + c/k + o(1/k): eliminate the 1/k term from the two largest samples.
    const Rational t1 = tau_at(k1), t2 = tau_at(k2);
    rep.empirical_limit = (Rational(k2) * t2 - Rational(k1) * t1) / Rational(k2 - k1);

    rep.rate_constant = 0;
    for (const auto& [k, t] : rep.table)
        rep.rate_constant =
            std::max(rep.rate_constant, std::abs(to_double((t - rep.empirical_limit) * k)));
    rep.discrepancy_integral = std::abs(to_double(rep.empirical_limit - rep.candidate_integral));
    rep.discrepancy_riemann = std::abs(to_double(rep.empirical_limit - rep.candidate_riemann));
    const double tol = 1e-6;
    if (rep.discrepancy_riemann <= tol && rep.discrepancy_integral > tol)
        rep.matches = "riemann";
    else if (rep.discrepancy_integral <= tol && rep.discrepancy_riemann > tol)
        rep.matches = "integral";
    else if (rep.discrepancy_integral <= tol && rep.discrepancy_riemann <= tol)
        rep.matches = "both";
    else
        rep.matches = "neither";
    return rep;
}

namespace {

void check(AxiomReport& rep, bool ok, const std::string& what) {
    ++rep.checks;
    if (!ok) {
        ++rep.failures;
        if (rep.failure_notes.size() < 16) rep.failure_notes.push_back(what);
    }
}

}  // namespace

AxiomReport axiom_suite(const LinkConfig& c, const std::vector<RadialProfile>& samples) {
    AxiomReport rep;
    const LevelMeasure m = levels(c);
    const double slack = 1e-9;

    for (size_t i = 0; i < samples.size(); ++i) {
        const RadialProfile& f = samples[i];
        const RadialProfile& g = samples[(i + 1) % samples.size()];
        const Rational zf = zeta0(c, f);

        // Monotonicity: f <= f + g^2 pointwise.
        {
            std::vector<PiecewisePoly::Piece> sq;
            for (const auto& pc : g.pieces()) sq.push_back({pc.lo, pc.hi, poly_mul(pc.coeffs, pc.coeffs)});
            RadialProfile upper = f.plus(PiecewisePoly(std::move(sq)));
            check(rep, zeta0(c, upper) >= zf, "monotonicity failed at sample " + std::to_string(i));
        }
        // Normalization: shifting by a constant shifts the value by it.
        {
            const Rational b(static_cast<int>(i) + 1, 3);
            check(rep, zeta0(c, f.plus_const(b)) == zf + b,
                  "normalization failed at sample " + std::to_string(i));
        }
        // Hofer-Lipschitz: |zeta(f) - zeta(g)| <= sup |f - g|.
        {
            const double lhs = std::abs(to_double(zf - zeta0(c, g)));
            const double sup = f.minus(g).max_abs();
            check(rep, lhs <= sup + slack, "Hofer-Lipschitz failed at sample " + std::to_string(i));
        }
        // Calabi property: force h(z_j) = 0 by subtracting the piecewise-linear
        // interpolation through the levels, then c0(h0 - int h0) = -int h0.
        {
            std::vector<PiecewisePoly::Piece> interp;
            const Rational v0 = f.eval(m.atoms.front()), vk = f.eval(m.atoms.back());
            interp.push_back({-kHalf, m.atoms.front(), Poly{v0}});
            for (size_t j = 0; j + 1 < m.atoms.size(); ++j) {
                const Rational x0 = m.atoms[j], x1 = m.atoms[j + 1];
                const Rational y0 = f.eval(x0), y1 = f.eval(x1);
                const Rational slope = (y1 - y0) / (x1 - x0);
                interp.push_back({x0, x1, Poly{y0 - slope * x0, slope}});
            }
            interp.push_back({m.atoms.back(), kHalf, Poly{vk}});
            RadialProfile h0 = f.minus(PiecewisePoly(std::move(interp)));
            for (const Rational& z : m.atoms)
                check(rep, h0.eval(z) == 0, "level-vanishing construction broke");
            const Rational cal = calabi_radial(h0);
            check(rep, zeta0(c, h0.plus_const(-cal)) == -cal,
                  "Calabi property failed at sample " + std::to_string(i));
        }
    }

    // Lagrangian control: profiles locally constant near every level.
    {
        const Rational w = (c.k >= 2 ? c.C : Rational(1, 4)) / 4;
        Rational sum = 0;
        std::vector<PiecewisePoly::Piece> parts;
        for (size_t j = 0; j < m.atoms.size(); ++j) {
            const Rational cj(static_cast<int>(3 * j * j + 1), 7);
            sum += cj;
            parts.push_back(smoothstep_piece(m.atoms[j] - w, m.atoms[j] - w / 2, Rational(0), cj));
            parts.push_back({m.atoms[j] - w / 2, m.atoms[j] + w / 2, Poly{cj}});
            parts.push_back(smoothstep_piece(m.atoms[j] + w / 2, m.atoms[j] + w, cj, Rational(0)));
        }
        RadialProfile ctrl = PiecewisePoly::assemble(std::move(parts), -kHalf, kHalf);
        check(rep, zeta0(c, ctrl) == sum / c.k, "Lagrangian control failed");
    }
    return rep;
}

std::vector<RadialProfile> sample_profiles(int count, std::uint64_t seed) {
    if (count < 0) throw std::invalid_argument("sample_profiles: count must be >= 0");
    std::mt19937_64 rng(seed);
    std::vector<RadialProfile> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        PiecewisePoly h = PiecewisePoly::zero(-kHalf, kHalf);
        const int bumps = 1 + static_cast<int>(rng() % 3);
        for (int b = 0; b < bumps; ++b) {
            const long long wnum = 1 + static_cast<long long>(rng() % 6);
            const long long cmax = 31 - wnum;  // keep the support inside (-1/2, 1/2)
            const long long cnum = static_cast<long long>(rng() % (2 * cmax + 1)) - cmax;
            const long long hnum = static_cast<long long>(rng() % 33) - 16;
            if (hnum == 0) continue;
            h = h.plus(bump_profile(Rational(cnum, 64), Rational(wnum, 64), Rational(hnum, 8),
                                    -kHalf, kHalf));
        }
        if (rng() % 2 == 0) {
            const long long c = static_cast<long long>(rng() % 9) - 4;
            h = h.plus_const(Rational(c, 4));
        }
        out.push_back(make_radial(std::move(h)));
    }
    return out;
}

}  // namespace lagconf
