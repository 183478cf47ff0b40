#include "lagconf/novikov.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace lagconf {

NovikovScalar::NovikovScalar(std::vector<Term> terms, OrderBound order)
    : terms_(std::move(terms)), order_(std::move(order)) {
    normalize();
}

void NovikovScalar::normalize() {
    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const Term& a, const Term& b) { return a.exp < b.exp; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (const Term& t : terms_) {
        if (!merged.empty() && merged.back().exp == t.exp)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(t);
    }
    terms_.clear();
    for (const Term& t : merged) {
        if (order_ && t.exp >= *order_) continue;
        if (std::abs(t.coeff) <= kZeroTolerance) continue;
        terms_.push_back(t);
    }
}

NovikovScalar NovikovScalar::constant(Complex c) {
    return NovikovScalar({{Rational(0), c}}, std::nullopt);
}

NovikovScalar NovikovScalar::monomial(Complex c, const Rational& e) {
    return NovikovScalar({{e, c}}, std::nullopt);
}

OrderBound NovikovScalar::val() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().exp;
}

Complex NovikovScalar::coeff_at(const Rational& e) const {
    for (const Term& t : terms_) {
        if (t.exp == e) return t.coeff;
        if (t.exp > e) break;
    }
    return Complex(0);
}

NovikovScalar NovikovScalar::truncated(const Rational& new_order) const {
    return NovikovScalar(terms_, order_min(order_, new_order));
}

NovikovScalar NovikovScalar::scaled(Complex c) const {
    std::vector<Term> ts = terms_;
    for (Term& t : ts) t.coeff *= c;
    return NovikovScalar(std::move(ts), order_);
}

NovikovScalar NovikovScalar::shifted(const Rational& e) const {
    std::vector<Term> ts = terms_;
    for (Term& t : ts) t.exp += e;
    OrderBound o = order_;
    if (o) *o += e;
    return NovikovScalar(std::move(ts), o);
}

Complex NovikovScalar::eval(double t) const {
    Complex acc(0);
    for (const Term& term : terms_) acc += term.coeff * std::pow(t, to_double(term.exp));
    return acc;
}

bool NovikovScalar::equiv_mod(const NovikovScalar& other, const Rational& g, double tol) const {
    NovikovScalar d = ns_sub(*this, other);
    for (const auto& t : d.terms()) {
        if (t.exp >= g) break;
        if (std::abs(t.coeff) > tol) return false;
    }
    return true;
}

NovikovScalar ns_add(const NovikovScalar& x, const NovikovScalar& y) {
    std::vector<NovikovScalar::Term> ts = x.terms_;
    ts.insert(ts.end(), y.terms_.begin(), y.terms_.end());
    return NovikovScalar(std::move(ts), order_min(x.order_, y.order_));
}

NovikovScalar ns_sub(const NovikovScalar& x, const NovikovScalar& y) {
    return ns_add(x, y.scaled(-1.0));
}

NovikovScalar ns_mul(const NovikovScalar& x, const NovikovScalar& y) {
    // Sound order of the product: min(order_x + val(y), order_y + val(x)).
    OrderBound o = order_min(order_add(x.order_, y.val()), order_add(y.order_, x.val()));
    std::vector<NovikovScalar::Term> ts;
    ts.reserve(x.terms_.size() * y.terms_.size());
    for (const auto& a : x.terms_)
        for (const auto& b : y.terms_) {
            Rational e = a.exp + b.exp;
            if (o && e >= *o) continue;
            ts.push_back({std::move(e), a.coeff * b.coeff});
        }
    return NovikovScalar(std::move(ts), std::move(o));
}

NovikovScalar ns_invert(const NovikovScalar& x, const Rational& order) {
    if (x.is_zero()) throw std::domain_error("ns_invert: not invertible (zero element)");
    const Rational v = *x.val();
    const Complex c = x.leading_coeff();
    // x = c T^v (1 + u) with val(u) > 0; 1/x = c^{-1} T^{-v} sum (-u)^n.
    OrderBound sound = x.order();
    if (sound) *sound -= 2 * v;
    OrderBound out_order = order_min(OrderBound(order), sound);
    Rational work = (out_order ? *out_order : order) + v;  // order for the (1+u)^{-1} factor
    NovikovScalar u = x.shifted(-v).scaled(1.0 / c);
    u = ns_sub(u, NovikovScalar::one()).truncated(work);
    NovikovScalar acc = NovikovScalar::one().truncated(work);
    NovikovScalar pw = NovikovScalar::one().truncated(work);
    if (!u.is_zero()) {
        const Rational vu = *u.val();
        for (Rational reach = vu; reach < work; reach += vu) {
            pw = ns_mul(pw, u.scaled(-1.0));
            if (pw.is_zero()) break;
            acc = ns_add(acc, pw);
        }
    }
    NovikovScalar res = acc.scaled(1.0 / c).shifted(-v);
    std::vector<NovikovScalar::Term> ts = res.terms();
    return NovikovScalar(std::move(ts), out_order);
}

NovikovScalar ns_exp(const NovikovScalar& x, const Rational& order) {
    OrderBound v = x.val();
    if (v && *v < 0) throw std::domain_error("ns_exp: not in Lambda_0 (negative valuation)");
    const Complex r0 = x.coeff_at(Rational(0));
    OrderBound out_order = order_min(OrderBound(order), x.order());
    Rational work = out_order ? *out_order : order;
    // Positive-valuation part.
    std::vector<NovikovScalar::Term> plus;
    for (const auto& t : x.terms())
        if (t.exp > 0) plus.push_back(t);
    NovikovScalar rp(std::move(plus), OrderBound(work));
    NovikovScalar acc = NovikovScalar::one().truncated(work);
    NovikovScalar pw = NovikovScalar::one().truncated(work);
    if (!rp.is_zero()) {
        const Rational vp = *rp.val();
        int n = 0;
        for (Rational reach = vp; reach < work; reach += vp) {
            ++n;
            pw = ns_mul(pw, rp).scaled(1.0 / n);  // R+^n / n!
            if (pw.is_zero()) break;
            acc = ns_add(acc, pw);
        }
    }
    NovikovScalar res = acc.scaled(std::exp(r0));
    std::vector<NovikovScalar::Term> ts = res.terms();
    return NovikovScalar(std::move(ts), out_order);
}

NovikovScalar ns_pow(const NovikovScalar& x, long long n, const Rational& order) {
    if (n == 0) return NovikovScalar::one().truncated(order);
    if (x.is_zero()) {
        if (n < 0) throw std::domain_error("ns_pow: negative power of zero");
        return x.truncated(order);
    }
    const long long m = n > 0 ? n : -n;
    const Rational v = *x.val();
    // Each factor has valuation v (resp. -v), so it only needs to be known
    // modulo T^{order - (m-1) * factor_valuation}.
    const Rational per_factor = n > 0 ? order - (m - 1) * v : order + (m - 1) * v;
    NovikovScalar base = n > 0 ? x.truncated(per_factor) : ns_invert(x, per_factor);
    NovikovScalar acc = base;
    for (long long i = 1; i < m; ++i) acc = ns_mul(acc, base);
    return acc.truncated(order);
}

GappedMonoid::GappedMonoid(std::vector<Rational> gens) : generators(std::move(gens)) {
    for (const Rational& g : generators)
        if (g <= 0) throw std::invalid_argument("GappedMonoid: generators must be positive");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
}

std::vector<Rational> GappedMonoid::enumerate(const Rational& cutoff) const {
    if (cutoff < 0) throw std::invalid_argument("GappedMonoid::enumerate: negative cutoff");
    std::set<Rational> seen{Rational(0)};
    std::vector<Rational> queue{Rational(0)};
    for (size_t i = 0; i < queue.size(); ++i) {
        const Rational base = queue[i];
        for (const Rational& g : generators) {
            Rational next = base + g;
            if (next > cutoff) continue;
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return std::vector<Rational>(seen.begin(), seen.end());
}

}  // namespace lagconf
