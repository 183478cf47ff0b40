#include "lagconf/superpotential.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lagconf {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void validate_signs(int k, const std::vector<int>& signs) {
    require(k >= 1, "superpotential: k must be >= 1");
    require((int)signs.size() == k - 1, "superpotential: expected k-1 sign entries");
    for (int s : signs) require(s == 1 || s == -1, "superpotential: signs must be +1 or -1");
}

Complex cpow_int(Complex z, long long e) {
    if (e == 0) return Complex(1.0);
    unsigned long long n = e < 0 ? (unsigned long long)(-e) : (unsigned long long)e;
    Complex acc(1.0), base = z;
    while (n) {
        if (n & 1ULL) acc *= base;
        base *= base;
        n >>= 1;
    }
    return e < 0 ? Complex(1.0) / acc : acc;
}

/**
 * Exact arithmetic in the group of 2(k+1)-th roots of unity, written as
 * s * eta^m with s = +-1, eta = exp(i pi/(k+1)) and 0 <= m < k+1 after
 * folding eta^{k+1} = -1 into the sign.
 */
struct RootElem {
    int sign = 1;
    int pow = 0;
};

RootElem root_canon(int sign, long long pow, int k) {
    const long long period = 2LL * (k + 1);
    pow %= period;
    if (pow < 0) pow += period;
    if (pow >= k + 1) {
        sign = -sign;
        pow -= k + 1;
    }
    return RootElem{sign, (int)pow};
}

RootElem root_mul(const RootElem& x, const RootElem& y, int k) {
    return root_canon(x.sign * y.sign, (long long)x.pow + y.pow, k);
}

RootElem root_pow(const RootElem& x, long long e, int k) {
    int sign = (e % 2 == 0) ? 1 : x.sign;
    return root_canon(sign, (long long)x.pow * e, k);
}

bool root_eq(const RootElem& x, const RootElem& y) { return x.sign == y.sign && x.pow == y.pow; }

Complex root_value(const RootElem& x, int k) {
    const double theta = std::numbers::pi * x.pow / (k + 1);
    return (double)x.sign * Complex(std::cos(theta), std::sin(theta));
}

/** Effective signs after the uniform q = -1 branch flip, with sentinels. */
std::vector<int> effective_signs(const std::vector<int>& signs, bool q_negative) {
    std::vector<int> eff = signs;
    if (q_negative)
        for (int& s : eff) s = -s;
    return eff;
}

/** Root-of-unity data of the closed-form point: zeta and the xi_i. */
struct LeadingRoots {
    RootElem zeta;
    std::vector<RootElem> xi;
};

LeadingRoots leading_roots(int k, const std::vector<int>& eff, int root_index) {
    require(root_index >= 0 && root_index <= k, "leading_solution: root_index must lie in [0, k]");
    // tau[i] = product of eff[0..i-1]  (tau[0] is the empty product).
    std::vector<int> tau(k, 1);
    for (int i = 1; i < k; ++i) tau[i] = tau[i - 1] * eff[i - 1];
    const int tau_top = tau[k - 1];
    const int m0 = (tau_top == 1) ? 0 : 1;
    LeadingRoots out;
    out.zeta = root_canon(1, m0 + 2LL * root_index, k);
    out.xi.resize(k);
    for (int i = 0; i < k; ++i)
        out.xi[i] = root_mul(RootElem{tau[i], 0}, root_pow(out.zeta, i + 1, k), k);
    // zeta^{k+1} must reproduce tau_top; fails only on an internal mistake.
    if (!root_eq(root_pow(out.zeta, k + 1, k), RootElem{tau_top, 0}))
        throw std::logic_error("leading_solution: root bookkeeping failed");
    return out;
}

/** Memoized integer powers of the substituted values. */
struct PowCache {
    const std::vector<NovikovScalar>* vals = nullptr;
    Rational order;
    std::map<std::pair<int, int>, NovikovScalar> memo;

    const NovikovScalar& get(int v, int e) {
        auto key = std::make_pair(v, e);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        NovikovScalar pw = ns_pow((*vals)[v], e, order);
        return memo.emplace(key, std::move(pw)).first->second;
    }
};

NovikovScalar eval_cached(const LaurentPoly& P, PowCache& cache) {
    NovikovScalar acc = NovikovScalar::zero();
    for (const auto& [mono, coeff] : P.terms) {
        NovikovScalar term = coeff;
        for (int v = 0; v < P.vars; ++v)
            if (mono[v] != 0) term = ns_mul(term, cache.get(v, mono[v]));
        acc = ns_add(acc, term);
    }
    return acc;
}

}  // namespace

LaurentPoly lp_zero(int vars) {
    require(vars >= 0, "lp_zero: vars must be >= 0");
    LaurentPoly P;
    P.vars = vars;
    return P;
}

void lp_add_term(LaurentPoly& P, const std::vector<int>& mono, const NovikovScalar& coeff) {
    require((int)mono.size() == P.vars, "lp_add_term: monomial length mismatch");
    if (coeff.is_zero()) return;
    auto it = P.terms.find(mono);
    if (it == P.terms.end()) {
        P.terms.emplace(mono, coeff);
        return;
    }
    it->second = ns_add(it->second, coeff);
    if (it->second.is_zero()) P.terms.erase(it);
}

LaurentPoly lp_add(const LaurentPoly& x, const LaurentPoly& y) {
    require(x.vars == y.vars, "lp_add: variable count mismatch");
    LaurentPoly out = x;
    for (const auto& [mono, coeff] : y.terms) lp_add_term(out, mono, coeff);
    return out;
}

LaurentPoly lp_mul(const LaurentPoly& x, const LaurentPoly& y) {
    require(x.vars == y.vars, "lp_mul: variable count mismatch");
    LaurentPoly out = lp_zero(x.vars);
    std::vector<int> mono(x.vars);
    for (const auto& [mx, cx] : x.terms)
        for (const auto& [my, cy] : y.terms) {
            for (int v = 0; v < x.vars; ++v) mono[v] = mx[v] + my[v];
            lp_add_term(out, mono, ns_mul(cx, cy));
        }
    return out;
}

NovikovScalar lp_eval(const LaurentPoly& P, const std::vector<NovikovScalar>& at,
                      const Rational& pow_order) {
    require((int)at.size() == P.vars, "lp_eval: wrong number of values");
    PowCache cache;
    cache.vals = &at;
    cache.order = pow_order;
    return eval_cached(P, cache);
}

Complex lp_eval_numeric(const LaurentPoly& P, const std::vector<Complex>& at, double t) {
    require((int)at.size() == P.vars, "lp_eval_numeric: wrong number of values");
    require(t > 0.0, "lp_eval_numeric: t must be positive");
    Complex acc(0.0);
    for (const auto& [mono, coeff] : P.terms) {
        Complex term = coeff.eval(t);
        for (int v = 0; v < P.vars; ++v)
            if (mono[v] != 0) term *= cpow_int(at[v], mono[v]);
        acc += term;
    }
    return acc;
}

std::vector<LaurentPoly> grad(const LaurentPoly& W) {
    std::vector<LaurentPoly> out(W.vars, lp_zero(W.vars));
    for (const auto& [mono, coeff] : W.terms)
        for (int v = 0; v < W.vars; ++v) {
            if (mono[v] == 0) continue;
            std::vector<int> m = mono;
            m[v] -= 1;
            lp_add_term(out[v], m, coeff.scaled(Complex((double)mono[v])));
        }
    return out;
}

std::vector<std::vector<int>> cartan_matrix(int k) {
    require(k >= 1, "cartan_matrix: k must be >= 1");
    std::vector<std::vector<int>> A(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i) {
        A[i][i] = 2;
        if (i + 1 < k) {
            A[i][i + 1] = -1;
            A[i + 1][i] = -1;
        }
    }
    return A;
}

std::vector<double> cartan_eigenvalues(int k) {
    require(k >= 1, "cartan_eigenvalues: k must be >= 1");
    std::vector<double> ev(k);
    for (int j = 1; j <= k; ++j) ev[j - 1] = 2.0 - 2.0 * std::cos(std::numbers::pi * j / (k + 1));
    return ev;
}

std::vector<double> cartan_eigenvalues_numeric(int k) {
    require(k >= 1, "cartan_eigenvalues_numeric: k must be >= 1");
    Eigen::MatrixXd A(k, k);
    A.setZero();
    const auto M = cartan_matrix(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) A(i, j) = M[i][j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("cartan_eigenvalues_numeric: eigensolver failed");
    std::vector<double> ev(k);
    for (int i = 0; i < k; ++i) ev[i] = es.eigenvalues()(i);
    return ev;
}

NovikovScalar beta_orb(const LinkConfig& c) {
    const Rational e = (c.B - c.C - c.a) / 2;
    if (!(e > 0))
        throw std::invalid_argument("beta_orb: orbifold normalization has non-positive valuation");
    return NovikovScalar::monomial(Complex(std::sqrt(2.0)), e);
}

SuperpotentialData build_superpotential(const LinkConfig& c, const std::vector<int>& signs,
                                        const NovikovScalar& beta, const LaurentPoly* W_hot) {
    validate_signs(c.k, signs);
    const int k = c.k, n = 2 * k;

    NovikovScalar E;  // exp(beta)
    if (beta.is_zero()) {
        E = NovikovScalar::one();
    } else {
        OrderBound v = beta.val();
        require(v.has_value() && *v > 0, "build_superpotential: beta must have positive valuation");
        require(beta.order().has_value(),
                "build_superpotential: nonzero beta requires a finite truncation order");
        E = ns_exp(beta, *beta.order());
    }

    LaurentPoly W = lp_zero(n);
    std::vector<int> mono(n, 0);
    const NovikovScalar Ta = NovikovScalar::monomial(Complex(1.0), c.a);
    for (int i = 0; i < k; ++i) {
        mono.assign(n, 0);
        mono[k + i] = 1;
        lp_add_term(W, mono, Ta);
        mono[k + i] = -1;
        lp_add_term(W, mono, Ta);
        mono.assign(n, 0);
        mono[i] = 1;
        lp_add_term(W, mono, E.shifted(Rational(k - 1 - i) * c.C + c.B));
        mono[i] = -1;
        lp_add_term(W, mono, E.shifted(Rational(i) * c.C + c.B));
    }
    for (int i = 0; i + 1 < k; ++i) {
        const NovikovScalar half =
            NovikovScalar::monomial(Complex(0.5 * signs[i]), c.B);
        mono.assign(n, 0);
        mono[i + 1] = -1;
        mono[i] = 1;
        mono[k + i + 1] = 1;
        lp_add_term(W, mono, half);
        mono[k + i + 1] = 0;
        mono[k + i] = -1;
        lp_add_term(W, mono, half);
    }

    SuperpotentialData S;
    S.config = c;
    S.signs = signs;
    S.beta = beta;
    S.beta_orb = beta_orb(c);
    S.W_hot = lp_zero(n);
    if (W_hot != nullptr) {
        require(W_hot->vars == n, "build_superpotential: W_hot variable count mismatch");
        S.W_hot = *W_hot;
        W = lp_add(W, *W_hot);
    }
    S.W = std::move(W);
    return S;
}

bool leading_solution_exact(const LinkConfig& c, const std::vector<int>& signs,
                            const LeadingBranch& branch) {
    validate_signs(c.k, signs);
    const int k = c.k;
    const std::vector<int> eff = effective_signs(signs, branch.q_negative);
    const LeadingRoots roots = leading_roots(k, eff, branch.root_index);
    auto sentinel = [&](int j) { return (j >= 0 && j <= k - 2) ? eff[j] : 1; };
    auto xi_at = [&](int i) { return (i >= 0 && i < k) ? roots.xi[i] : RootElem{1, 0}; };
    for (int i = 0; i < k; ++i) {
        const int sigma = sentinel(i - 1) * sentinel(i);
        RootElem lhs = root_pow(xi_at(i - 1), -1, k);
        lhs = root_mul(lhs, root_pow(xi_at(i), 2, k), k);
        lhs = root_mul(lhs, root_pow(xi_at(i + 1), -1, k), k);
        if (!root_eq(lhs, RootElem{sigma, 0})) return false;
    }
    return true;
}

CriticalPoint leading_solution(const LinkConfig& c, const std::vector<int>& signs,
                               const LeadingBranch& branch) {
    validate_signs(c.k, signs);
    if (!leading_solution_exact(c, signs, branch))
        throw std::logic_error("leading_solution: symbolic certification failed");
    const int k = c.k;
    const std::vector<int> eff = effective_signs(signs, branch.q_negative);
    const LeadingRoots roots = leading_roots(k, eff, branch.root_index);
    const double q0 = branch.q_negative ? -1.0 : 1.0;

    CriticalPoint pt;
    pt.p.reserve(k);
    pt.q.reserve(k);
    for (int i = 0; i < k; ++i) pt.p.push_back(NovikovScalar::constant(root_value(roots.xi[i], k)));
    for (int i = 0; i < k; ++i) pt.q.push_back(NovikovScalar::constant(Complex(q0)));
    pt.solved_order = Rational(0);

    // Residuals against the bulk-free potential (beta = 0, no hot part).
    const SuperpotentialData S = build_superpotential(c, signs, NovikovScalar::zero());
    const auto gw = grad(S.W);
    std::vector<NovikovScalar> vals;
    vals.reserve(2 * k);
    for (int i = 0; i < k; ++i) vals.push_back(pt.p[i]);
    for (int i = 0; i < k; ++i) vals.push_back(pt.q[i]);
    pt.residual_valuations.reserve(2 * k);
    for (int v = 0; v < 2 * k; ++v)
        pt.residual_valuations.push_back(lp_eval(gw[v], vals, Rational(2)).val());
    return pt;
}

GappedMonoid refinement_monoid(const LinkConfig& c, const Rational& g_max) {
    require(g_max >= 0, "refinement_monoid: g_max must be >= 0");
    std::vector<Rational> base_gens = {c.a, c.B};
    if (c.C > 0) base_gens.push_back(c.C);
    const Rational half_orb = (c.B - c.C - c.a) / 2;
    if (half_orb > 0) base_gens.push_back(half_orb);
    GappedMonoid base(base_gens);
    const Rational hi = std::max(Rational(c.a), Rational(c.B)) + g_max;
    std::vector<Rational> gens;
    for (const Rational& e : base.enumerate(hi)) {
        Rational da = e - c.a;
        if (da > 0 && da <= g_max) gens.push_back(da);
        Rational db = e - c.B;
        if (db > 0 && db <= g_max) gens.push_back(db);
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return GappedMonoid(gens);
}

namespace {

/** Coefficient read that refuses to look past the truncation order. */
Complex sound_coeff(const NovikovScalar& r, const Rational& e) {
    if (r.order().has_value() && !(*r.order() > e))
        throw std::invalid_argument(
            "refine_critical_point: residual truncated before the working exponent; "
            "increase the beta truncation order");
    return r.coeff_at(e);
}

void check_ladder(const NovikovScalar& r, const Rational& bound, const char* which, int index,
                  const Rational& level) {
    OrderBound v = r.val();
    if (v.has_value() && *v < bound)
        throw std::runtime_error(std::string("refine_critical_point: ") + which +
                                 "-residual fails to improve at level " +
                                 rational_to_string(level) + " (equation " +
                                 std::to_string(index) + ")");
}

}  // namespace

CriticalPoint refine_critical_point(const SuperpotentialData& S, const CriticalPoint& start,
                                    const Rational& g_max) {
    const int k = S.config.k;
    validate_signs(k, S.signs);
    require((int)start.p.size() == k && (int)start.q.size() == k,
            "refine_critical_point: start has wrong arity");
    if (g_max < 0) throw std::invalid_argument("refine_critical_point: g_max must be >= 0");
    if (g_max == 0) return start;

    // The start must be a bare leading-order point: constants of valuation 0.
    std::vector<Complex> xi(k);
    double q0 = 0.0;
    for (int i = 0; i < k; ++i) {
        const auto& ps = start.p[i];
        const auto& qs = start.q[i];
        require(ps.terms().size() == 1 && ps.terms().front().exp == 0,
                "refine_critical_point: start p-values must be leading-order constants");
        require(qs.terms().size() == 1 && qs.terms().front().exp == 0,
                "refine_critical_point: start q-values must be leading-order constants");
        xi[i] = ps.terms().front().coeff;
        const Complex qc = qs.terms().front().coeff;
        require(std::abs(qc.imag()) < 1e-9 && std::abs(std::abs(qc.real()) - 1.0) < 1e-9,
                "refine_critical_point: start q-values must be +1 or -1");
        const double sign = qc.real() > 0 ? 1.0 : -1.0;
        if (i == 0)
            q0 = sign;
        else
            require(sign == q0, "refine_critical_point: start q-values must share one sign");
    }

    const Rational a = S.config.a, B = S.config.B;
    const Rational work = Rational(std::max(Rational(a), Rational(B))) + g_max + 1;

    // Row scalings: a T^g perturbation v of log p changes the p-residual at
    // T^{B+g} by m_i (A v)_i with A the tridiagonal 2/-1 matrix.
    std::vector<Complex> m(k);
    for (int i = 0; i < k; ++i) {
        if (i == 0)
            m[i] = Complex(1.0) / (xi[0] * xi[0]);
        else if (i < k - 1)
            m[i] = (double)S.signs[i - 1] * q0 * xi[i - 1] / (xi[i] * xi[i]);
        else
            m[i] = Complex(1.0);
    }

    Eigen::MatrixXcd A(k, k);
    A.setZero();
    const auto Am = cartan_matrix(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) A(i, j) = Complex((double)Am[i][j]);
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);
    if (std::abs(lu.determinant()) < 1e-9)
        throw std::runtime_error("refine_critical_point: singular linear system");

    const auto gw = grad(S.W);
    std::vector<NovikovScalar> P(k, NovikovScalar::zero()), Q(k, NovikovScalar::zero());
    std::vector<NovikovScalar> vals(2 * k);
    auto rebuild = [&]() {
        for (int i = 0; i < k; ++i) vals[i] = ns_exp(P[i], work).scaled(xi[i]);
        for (int i = 0; i < k; ++i) vals[k + i] = ns_exp(Q[i], work).scaled(Complex(q0));
    };
    auto residuals = [&]() {
        PowCache cache;
        cache.vals = &vals;
        cache.order = work;
        std::vector<NovikovScalar> r(2 * k);
        for (int v = 0; v < 2 * k; ++v) r[v] = eval_cached(gw[v], cache);
        return r;
    };

    rebuild();
    const auto levels = refinement_monoid(S.config, g_max).enumerate(g_max);
    for (const Rational& g : levels) {
        if (g == 0) continue;
        auto res = residuals();
        // q-corrections first: they feed the p-residuals at this level.
        bool updated = false;
        for (int i = 0; i < k; ++i) {
            check_ladder(res[k + i], Rational(a + g), "q", i, g);
            const Complex cq = sound_coeff(res[k + i], Rational(a + g));
            if (std::abs(cq) > 0.0) {
                Q[i] = ns_add(Q[i], NovikovScalar::monomial(-cq / 2.0, g));
                updated = true;
            }
        }
        if (updated) {
            rebuild();
            res = residuals();
        }
        Eigen::VectorXcd rhs(k);
        bool any_p = false;
        for (int i = 0; i < k; ++i) {
            check_ladder(res[i], Rational(B + g), "p", i, g);
            const Complex cp = sound_coeff(res[i], Rational(B + g));
            rhs(i) = -cp / m[i];
            if (std::abs(cp) > 0.0) any_p = true;
        }
        if (any_p) {
            const Eigen::VectorXcd v = lu.solve(rhs);
            for (int i = 0; i < k; ++i)
                if (std::abs(v(i)) > 0.0)
                    P[i] = ns_add(P[i], NovikovScalar::monomial(v(i), g));
            rebuild();
        }
    }

    CriticalPoint out;
    out.p.assign(vals.begin(), vals.begin() + k);
    out.q.assign(vals.begin() + k, vals.end());
    out.solved_order = g_max;
    const auto res = residuals();
    out.residual_valuations.reserve(2 * k);
    for (int v = 0; v < 2 * k; ++v) {
        const Rational base = v < k ? B : a;
        OrderBound rv = res[v].val();
        if (rv.has_value() && !(*rv > base + g_max))
            throw std::logic_error("refine_critical_point: postcondition failed at equation " +
                                   std::to_string(v));
        out.residual_valuations.push_back(rv);
    }
    return out;
}

std::vector<Complex> solve_numeric_oracle(const SuperpotentialData& S, double t,
                                          const LeadingBranch& branch) {
    require(t > 0.0 && t < 1.0, "solve_numeric_oracle: t must lie in (0, 1)");
    const int k = S.config.k, n = 2 * k;
    const auto gw = grad(S.W);
    std::vector<std::vector<LaurentPoly>> hess(n);
    for (int i = 0; i < n; ++i) hess[i] = grad(gw[i]);

    const CriticalPoint lead = leading_solution(S.config, S.signs, branch);
    std::vector<Complex> x(n);
    for (int i = 0; i < k; ++i) x[i] = lead.p[i].leading_coeff();
    for (int i = 0; i < k; ++i) x[k + i] = lead.q[i].leading_coeff();

    auto gradient = [&](const std::vector<Complex>& at) {
        Eigen::VectorXcd g(n);
        for (int i = 0; i < n; ++i) g(i) = lp_eval_numeric(gw[i], at, t);
        return g;
    };

    Eigen::VectorXcd g = gradient(x);
    for (int iter = 0; iter < 500; ++iter) {
        const double ng = g.norm();
        if (ng < 1e-10) return x;
        Eigen::MatrixXcd H(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) H(i, j) = lp_eval_numeric(hess[i][j], x, t);
        const Eigen::VectorXcd dx = H.partialPivLu().solve(-g);
        if (!dx.allFinite()) throw std::runtime_error("solve_numeric_oracle: Newton divergence");
        double lam = 1.0;
        bool accepted = false;
        while (lam >= 1e-8) {
            std::vector<Complex> xn(n);
            for (int i = 0; i < n; ++i) xn[i] = x[i] + lam * dx(i);
            const Eigen::VectorXcd gn = gradient(xn);
            if (gn.norm() < ng) {
                x = std::move(xn);
                g = gn;
                accepted = true;
                break;
            }
            lam *= 0.5;
        }
        if (!accepted) throw std::runtime_error("solve_numeric_oracle: Newton divergence");
    }
    throw std::runtime_error("solve_numeric_oracle: Newton divergence");
}

namespace {

void validate_rates(const std::vector<double>& r, const std::vector<double>& rho,
                    long long coeff_bound) {
    require(!r.empty() && r.size() == rho.size(),
            "check_nonresonance: rate lists must be nonempty and equally long");
    require(coeff_bound >= 1, "check_nonresonance: coeff_bound must be >= 1");
    for (double v : r)
        require(std::isfinite(v) && v > 0, "check_nonresonance: rates must be positive");
    for (double v : rho)
        require(std::isfinite(v) && v > 0, "check_nonresonance: rates must be positive");
}

/** All values sum_i c_i * w_i over nonzero integer vectors with |c_i| <= m.
 * With half_only, the first nonzero entry is required positive. */
void enumerate_combinations(const std::vector<double>& w, long long m, bool half_only,
                            std::vector<double>& out) {
    const int k = (int)w.size();
    std::vector<long long> c(k, -m);
    while (true) {
        bool all_zero = true, skip = false;
        for (int i = 0; i < k; ++i) {
            if (c[i] != 0) {
                if (half_only && c[i] < 0) skip = true;
                all_zero = false;
                break;
            }
        }
        if (!all_zero && !skip) {
            double s = 0.0;
            for (int i = 0; i < k; ++i) s += (double)c[i] * w[i];
            out.push_back(s);
        }
        int pos = k - 1;
        while (pos >= 0 && c[pos] == m) c[pos--] = -m;
        if (pos < 0) break;
        ++c[pos];
    }
}

bool exhaustive_relation(const std::vector<double>& r, const std::vector<double>& rho,
                         long long m) {
    const double tol = 1e-9;
    std::vector<double> left, right;
    enumerate_combinations(r, m, /*half_only=*/true, left);
    enumerate_combinations(rho, m, /*half_only=*/false, right);
    std::sort(right.begin(), right.end());
    for (double s : left) {
        auto it = std::lower_bound(right.begin(), right.end(), s - tol);
        if (it != right.end() && *it <= s + tol) return true;
    }
    return false;
}

bool lll_relation(const std::vector<double>& r, const std::vector<double>& rho, long long bound) {
    const int k = (int)r.size(), n = 2 * k, dim = n + 1;
    const long double scale = 1e12L;
    std::vector<long double> x(n);
    for (int i = 0; i < k; ++i) x[i] = (long double)r[i];
    for (int i = 0; i < k; ++i) x[k + i] = -(long double)rho[i];

    std::vector<std::vector<long double>> b(n, std::vector<long double>(dim, 0.0L));
    for (int i = 0; i < n; ++i) {
        b[i][i] = 1.0L;
        b[i][n] = scale * x[i];
    }

    std::vector<std::vector<long double>> bs(n, std::vector<long double>(dim));
    std::vector<std::vector<long double>> mu(n, std::vector<long double>(n, 0.0L));
    std::vector<long double> Bn(n, 0.0L);
    auto dot = [dim](const std::vector<long double>& u, const std::vector<long double>& v) {
        long double s = 0.0L;
        for (int d = 0; d < dim; ++d) s += u[d] * v[d];
        return s;
    };
    auto gso = [&]() {
        for (int i = 0; i < n; ++i) {
            bs[i] = b[i];
            for (int j = 0; j < i; ++j) {
                mu[i][j] = Bn[j] > 0.0L ? dot(b[i], bs[j]) / Bn[j] : 0.0L;
                for (int d = 0; d < dim; ++d) bs[i][d] -= mu[i][j] * bs[j][d];
            }
            Bn[i] = dot(bs[i], bs[i]);
        }
    };
    gso();
    int kk = 1, steps = 0;
    while (kk < n && ++steps < 20000) {
        for (int j = kk - 1; j >= 0; --j) {
            const long double q = std::roundl(mu[kk][j]);
            if (q != 0.0L) {
                for (int d = 0; d < dim; ++d) b[kk][d] -= q * b[j][d];
                mu[kk][j] -= q;
                for (int jj = 0; jj < j; ++jj) mu[kk][jj] -= q * mu[j][jj];
            }
        }
        gso();
        if (Bn[kk] >= (0.99L - mu[kk][kk - 1] * mu[kk][kk - 1]) * Bn[kk - 1]) {
            ++kk;
        } else {
            std::swap(b[kk], b[kk - 1]);
            gso();
            kk = std::max(kk - 1, 1);
        }
    }

    auto is_relation = [&](const std::vector<long double>& row) {
        bool alpha_nz = false, beta_nz = false;
        long double s = 0.0L;
        for (int i = 0; i < n; ++i) {
            const long long ci = (long long)std::llroundl(row[i]);
            if (std::llabs(ci) > bound) return false;
            if (ci != 0) (i < k ? alpha_nz : beta_nz) = true;
            s += (long double)ci * x[i];
        }
        return alpha_nz && beta_nz && std::fabsl(s) <= 1e-9L;
    };
    for (int i = 0; i < n; ++i)
        if (is_relation(b[i])) return true;
    std::vector<long double> combo(dim);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int sgn : {1, -1}) {
                for (int d = 0; d < dim; ++d) combo[d] = b[i][d] + sgn * b[j][d];
                if (is_relation(combo)) return true;
            }
    return false;
}

}  // namespace

bool has_integer_relation(const std::vector<double>& r, const std::vector<double>& rho,
                          long long coeff_bound) {
    validate_rates(r, rho, coeff_bound);
    const int k = (int)r.size();
    const long double combos = std::powl(2.0L * coeff_bound + 1.0L, (long double)k);
    if (k <= 3 && combos <= 3e7L) return exhaustive_relation(r, rho, coeff_bound);
    return lll_relation(r, rho, coeff_bound);
}

bool check_nonresonance(const std::vector<double>& r, const std::vector<double>& rho,
                        long long coeff_bound) {
    validate_rates(r, rho, coeff_bound);
    const int k = (int)r.size();
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!(r[i] * rho[j] < rho[i] * r[j])) return false;
    return !has_integer_relation(r, rho, coeff_bound);
}

}  // namespace lagconf
