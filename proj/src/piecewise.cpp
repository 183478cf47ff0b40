#include "lagconf/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace lagconf {

namespace {

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly poly_scale(const Poly& a, const Rational& s) {
    Poly r = a;
    for (Rational& c : r) c *= s;
    trim(r);
    return r;
}

Poly poly_compose_linear(const Poly& p, const Rational& alpha, const Rational& beta) {
    // Horner over polynomials: p(alpha + beta x).
    Poly lin{alpha, beta};
    Poly acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = poly_mul(acc, lin);
        acc = poly_add(acc, Poly{*it});
    }
    trim(acc);
    return acc;
}

Rational poly_eval(const Poly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double poly_eval(const Poly& p, double x) {
    double acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

PiecewisePoly::PiecewisePoly(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    for (auto& pc : pieces_) trim(pc.coeffs);
    validate();
}

void PiecewisePoly::validate() const {
    if (pieces_.empty()) throw std::invalid_argument("PiecewisePoly: no pieces");
    for (const auto& pc : pieces_)
        if (!(pc.lo < pc.hi)) throw std::invalid_argument("PiecewisePoly: empty piece");
    for (size_t i = 1; i < pieces_.size(); ++i) {
        if (pieces_[i].lo != pieces_[i - 1].hi)
            throw std::invalid_argument("PiecewisePoly: pieces do not partition the domain");
        if (poly_eval(pieces_[i - 1].coeffs, pieces_[i].lo) !=
            poly_eval(pieces_[i].coeffs, pieces_[i].lo))
            throw std::invalid_argument("PiecewisePoly: discontinuity at breakpoint " +
                                        rational_to_string(pieces_[i].lo));
    }
}

PiecewisePoly PiecewisePoly::constant(const Rational& c, const Rational& lo, const Rational& hi) {
    return PiecewisePoly({{lo, hi, Poly{c}}});
}

PiecewisePoly PiecewisePoly::zero(const Rational& lo, const Rational& hi) {
    return constant(Rational(0), lo, hi);
}

PiecewisePoly PiecewisePoly::from_poly(const Poly& p, const Rational& a, const Rational& b,
                                       const Rational& lo, const Rational& hi) {
    return assemble({{a, b, p}}, lo, hi);
}

PiecewisePoly PiecewisePoly::assemble(std::vector<Piece> pieces, const Rational& lo,
                                      const Rational& hi) {
    std::sort(pieces.begin(), pieces.end(),
              [](const Piece& x, const Piece& y) { return x.lo < y.lo; });
    std::vector<Piece> out;
    Rational cur = lo;
    for (auto& pc : pieces) {
        if (pc.lo < cur || pc.hi > hi)
            throw std::invalid_argument("PiecewisePoly::assemble: pieces overlap or exceed domain");
        if (pc.lo > cur) out.push_back({cur, pc.lo, Poly{}});
        cur = pc.hi;
        out.push_back(std::move(pc));
    }
    if (cur < hi) out.push_back({cur, hi, Poly{}});
    return PiecewisePoly(std::move(out));
}

Rational PiecewisePoly::eval(const Rational& x) const {
    if (x < domain_lo() || x > domain_hi())
        throw std::out_of_range("PiecewisePoly::eval: point outside domain");
    for (const auto& pc : pieces_)
        if (x <= pc.hi) return poly_eval(pc.coeffs, x);
    return poly_eval(pieces_.back().coeffs, x);
}

double PiecewisePoly::eval_d(double x) const {
    for (const auto& pc : pieces_)
        if (x <= to_double(pc.hi)) return poly_eval(pc.coeffs, x);
    return poly_eval(pieces_.back().coeffs, x);
}

Rational PiecewisePoly::integral() const { return integral(domain_lo(), domain_hi()); }

Rational PiecewisePoly::integral(const Rational& a, const Rational& b) const {
    if (a < domain_lo() || b > domain_hi() || a > b)
        throw std::out_of_range("PiecewisePoly::integral: bad interval");
    Rational total = 0;
    for (const auto& pc : pieces_) {
        Rational lo = std::max(pc.lo, a), hi = std::min(pc.hi, b);
        if (!(lo < hi)) continue;
        Rational acc = 0, plo = 1, phi = 1;
        for (size_t i = 0; i < pc.coeffs.size(); ++i) {
            plo *= lo;
            phi *= hi;
            acc += pc.coeffs[i] * (phi - plo) / Rational(static_cast<int>(i) + 1);
        }
        total += acc;
    }
    return total;
}

PiecewisePoly PiecewisePoly::plus(const PiecewisePoly& other) const {
    if (domain_lo() != other.domain_lo() || domain_hi() != other.domain_hi())
        throw std::invalid_argument("PiecewisePoly::plus: domain mismatch");
    std::set<Rational> cuts;
    for (const auto& pc : pieces_) {
        cuts.insert(pc.lo);
        cuts.insert(pc.hi);
    }
    for (const auto& pc : other.pieces_) {
        cuts.insert(pc.lo);
        cuts.insert(pc.hi);
    }
    std::vector<Piece> out;
    auto it = cuts.begin();
    Rational prev = *it++;
    for (; it != cuts.end(); ++it) {
        Rational mid = (prev + *it) / 2;
        Poly sum;
        for (const auto& pc : pieces_)
            if (pc.lo <= mid && mid <= pc.hi) {
                sum = pc.coeffs;
                break;
            }
        for (const auto& pc : other.pieces_)
            if (pc.lo <= mid && mid <= pc.hi) {
                sum = poly_add(sum, pc.coeffs);
                break;
            }
        out.push_back({prev, *it, std::move(sum)});
        prev = *it;
    }
    return PiecewisePoly(std::move(out));
}

PiecewisePoly PiecewisePoly::minus(const PiecewisePoly& other) const {
    return plus(other.scaled(Rational(-1)));
}

PiecewisePoly PiecewisePoly::scaled(const Rational& s) const {
    std::vector<Piece> out = pieces_;
    for (auto& pc : out) pc.coeffs = poly_scale(pc.coeffs, s);
    return PiecewisePoly(std::move(out));
}

PiecewisePoly PiecewisePoly::plus_const(const Rational& c) const {
    std::vector<Piece> out = pieces_;
    for (auto& pc : out) pc.coeffs = poly_add(pc.coeffs, Poly{c});
    return PiecewisePoly(std::move(out));
}

PiecewisePoly PiecewisePoly::reflected() const {
    if (domain_lo() != -domain_hi())
        throw std::invalid_argument("PiecewisePoly::reflected: domain not symmetric");
    std::vector<Piece> out;
    for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it)
        out.push_back({-it->hi, -it->lo, poly_compose_linear(it->coeffs, Rational(0), Rational(-1))});
    return PiecewisePoly(std::move(out));
}

bool PiecewisePoly::operator==(const PiecewisePoly& other) const {
    PiecewisePoly d = minus(other);
    return d.is_zero();
}

bool PiecewisePoly::is_zero() const {
    for (const auto& pc : pieces_)
        if (!pc.coeffs.empty()) return false;
    return true;
}

bool PiecewisePoly::supported_in(const Rational& a, const Rational& b) const {
    for (const auto& pc : pieces_) {
        if (pc.coeffs.empty()) continue;
        if (pc.lo < a || pc.hi > b) return false;
    }
    return true;
}

Rational PiecewisePoly::support_radius() const {
    Rational r = 0;
    for (const auto& pc : pieces_) {
        if (pc.coeffs.empty()) continue;
        Rational lo = abs(pc.lo), hi = abs(pc.hi);
        if (lo > r) r = lo;
        if (hi > r) r = hi;
    }
    return r;
}

double PiecewisePoly::max_on(double a, double b) const { return argmax_on(a, b).second; }

std::pair<double, double> PiecewisePoly::argmax_on(double a, double b) const {
    double best = -std::numeric_limits<double>::infinity();
    double best_x = a;
    auto consider = [&](double x) {
        if (x < a || x > b) return;
        double v = eval_d(x);
        if (v > best) {
            best = v;
            best_x = x;
        }
    };
    consider(a);
    consider(b);
    for (const auto& pc : pieces_) {
        double lo = std::max(a, to_double(pc.lo)), hi = std::min(b, to_double(pc.hi));
        if (lo > hi) continue;
        consider(lo);
        consider(hi);
        // Interior critical points: roots of the derivative, isolated by sign
        // changes on a fine grid and refined by bisection.
        if (pc.coeffs.size() < 3) continue;  // affine pieces peak at endpoints
        Poly d(pc.coeffs.size() - 1);
        for (size_t i = 1; i < pc.coeffs.size(); ++i)
            d[i - 1] = pc.coeffs[i] * Rational(static_cast<int>(i));
        const int grid = 64;
        double prev_x = lo, prev_v = poly_eval(d, lo);
        for (int g = 1; g <= grid; ++g) {
            double x = lo + (hi - lo) * g / grid;
            double v = poly_eval(d, x);
            if (prev_v == 0.0) consider(prev_x);
            if (prev_v * v < 0) {
                double u = prev_x, w = x;
                for (int iter = 0; iter < 80; ++iter) {
                    double m = 0.5 * (u + w);
                    double vm = poly_eval(d, m);
                    if (prev_v * vm <= 0)
                        w = m;
                    else
                        u = m;
                }
                consider(0.5 * (u + w));
            }
            prev_x = x;
            prev_v = v;
        }
    }
    return {best_x, best};
}

double PiecewisePoly::max_abs() const {
    double lo = to_double(domain_lo()), hi = to_double(domain_hi());
    return std::max(max_on(lo, hi), scaled(Rational(-1)).max_on(lo, hi));
}

PiecewisePoly::Piece smoothstep_piece(const Rational& x0, const Rational& x1, const Rational& y0,
                                      const Rational& y1) {
    if (!(x0 < x1)) throw std::invalid_argument("smoothstep_piece: empty interval");
    const Rational d = x1 - x0;
    Poly u{-x0 / d, 1 / d};                       // u(x) = (x - x0) / d
    Poly s = poly_mul(poly_mul(u, u), poly_add(poly_scale(Poly{Rational(1)}, 3),
                                               poly_scale(u, Rational(-2))));  // 3u^2 - 2u^3
    Poly p = poly_add(Poly{y0}, poly_scale(s, y1 - y0));
    return {x0, x1, std::move(p)};
}

PiecewisePoly bump_profile(const Rational& center, const Rational& width, const Rational& height,
                           const Rational& lo, const Rational& hi) {
    if (!(width > 0)) throw std::invalid_argument("bump_profile: width must be positive");
    if (center - width < lo || center + width > hi)
        throw std::invalid_argument("bump_profile: support exceeds domain");
    std::vector<PiecewisePoly::Piece> parts;
    parts.push_back(smoothstep_piece(center - width, center, Rational(0), height));
    parts.push_back(smoothstep_piece(center, center + width, height, Rational(0)));
    return PiecewisePoly::assemble(std::move(parts), lo, hi);
}

}  // namespace lagconf
