#include "lagconf/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lagconf {

namespace {

std::vector<char> membership(const DifferenceSet& d) {
    std::vector<char> in(static_cast<size_t>(d.N) + 1, 0);
    for (int e : d.elements) in[static_cast<size_t>(e)] = 1;
    return in;
}

/**
 * Depth-first search over red cliques listed as increasing vertex sequences,
 * visited in lexicographic order. Stops early once a clique of `target` size
 * is found (returns it); with target <= 0 it returns the first maximum clique
 * in lexicographic order (two passes: size, then retrieval).
 */
struct CliqueSearch {
    const std::vector<char>& red;  // difference membership, index 0..N
    int N;
    std::vector<int> current, best;
    int target = 0;
    bool found = false;

    CliqueSearch(const std::vector<char>& red_, int N_) : red(red_), N(N_) {}

    bool compatible(int v) const {
        for (int u : current)
            if (!red[static_cast<size_t>(v - u)]) return false;
        return true;
    }

    void dfs(int next) {
        if (found) return;
        if (target > 0 && static_cast<int>(current.size()) == target) {
            best = current;
            found = true;
            return;
        }
        if (static_cast<int>(current.size()) > static_cast<int>(best.size()) && target <= 0)
            best = current;
        for (int v = next; v <= N; ++v) {
            // Prune: not enough vertices left to reach the target.
            if (target > 0 &&
                static_cast<int>(current.size()) + (N - v + 1) < target)
                return;
            if (!compatible(v)) continue;
            current.push_back(v);
            dfs(v + 1);
            current.pop_back();
            if (found) return;
        }
    }
};

int max_clique_size(const std::vector<char>& red, int N) {
    CliqueSearch s(red, N);
    s.target = 0;
    s.dfs(0);
    return static_cast<int>(s.best.size());
}

bool clique_of_size(const std::vector<char>& red, int N, int size, std::vector<int>* out) {
    CliqueSearch s(red, N);
    s.target = size;
    s.dfs(0);
    if (out) *out = s.best;
    return s.found;
}

}  // namespace

DifferenceSet make_difference_set(std::vector<int> elements, int N) {
    if (N < 1) throw std::invalid_argument("difference set: window N must be >= 1");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (int e : elements)
        if (e < 1 || e > N)
            throw std::invalid_argument("difference set: elements must lie in [1, N]");
    return DifferenceSet{std::move(elements), N};
}

bool has_delta_clique(const DifferenceSet& d, int size) {
    if (size < 2) throw std::invalid_argument("has_delta_clique: size must be >= 2");
    if (size > d.N + 1) return false;
    const auto in = membership(d);
    return clique_of_size(in, d.N, size, nullptr);
}

std::vector<int> recurrence_set(const DifferenceSet& d) {
    const auto in = membership(d);
    std::vector<int> out;
    for (int n = 1; n <= d.N; ++n)
        if (!in[static_cast<size_t>(n)]) out.push_back(n);
    return out;
}

std::vector<int> maximum_clique(const DifferenceSet& d) {
    const auto in = membership(d);
    const int size = max_clique_size(in, d.N);
    std::vector<int> out;
    clique_of_size(in, d.N, size, &out);
    return out;
}

DensityReport density_bound_check(const DifferenceSet& d, int k, int m) {
    if (k < 1 || m < 1) throw std::invalid_argument("density_bound_check: need k, m >= 1");
    DensityReport rep;
    rep.k = k;
    rep.m = m;
    const long long mk = static_cast<long long>(m) * k;
    if (mk > d.N)
        rep.precondition_failures.push_back("window too small: N < m*k");
    const auto in = membership(d);
    if (mk <= d.N && clique_of_size(in, d.N, k + 1, nullptr))
        rep.precondition_failures.push_back("a red clique on k+1 vertices exists");

    rep.clique = maximum_clique(d);
    rep.q = rep.clique.back();
    if (rep.q > mk)
        rep.precondition_failures.push_back("maximum clique reaches past m*k");

    const long long window = std::min<long long>(mk, d.N);

    // Blue neighbors of 0 within [1, mk].
    for (long long n = 1; n <= window; ++n)
        if (!in[static_cast<size_t>(n)]) ++rep.blue_count;
    rep.inequality_holds = rep.blue_count >= static_cast<long long>(m) - rep.q;

    // Degree count: every vertex of [0, mk] outside the clique has a blue
    // edge into it, so the max blue degree d over the clique obeys
    // (m-1)k + 1 <= d*k, forcing d >= m.
    if (rep.q <= mk && mk <= d.N) {
        for (int u : rep.clique) {
            int deg = 0;
            for (long long v = 0; v <= mk; ++v)
                if (v != u && !in[static_cast<size_t>(std::llabs(v - u))]) ++deg;
            rep.max_blue_degree = std::max(rep.max_blue_degree, deg);
        }
        rep.degree_bound_ok = static_cast<long long>(m - 1) * k + 1 <=
                              static_cast<long long>(rep.max_blue_degree) * k;
    } else {
        rep.degree_bound_ok = true;  // vacuous; precondition failure already recorded
    }

    // Prefix windows [1, n]: whenever floor(n/k)*k covers the clique, the same
    // translation argument applies and yields floor(n/k) - q blue elements.
    rep.strengthened_ok = true;
    long long running_blue = 0;
    for (int n = 1; n <= d.N; ++n) {
        if (!in[static_cast<size_t>(n)]) ++running_blue;
        const long long mp = n / k;
        if (mp * k < rep.q) continue;
        if (running_blue < mp - rep.q) {
            rep.strengthened_ok = false;
            break;
        }
    }
    return rep;
}

EnumReport enumerate_and_verify(int k, int N, bool check_each) {
    if (k < 1) throw std::invalid_argument("enumerate_and_verify: need k >= 1");
    if (N < 1) throw std::invalid_argument("enumerate_and_verify: need N >= 1");
    if (N > 22)
        throw std::invalid_argument("enumerate_and_verify: window too large (N <= 22)");

    EnumReport rep;
    rep.max_size = -1;
    unsigned long long best_mask = 0;
    const unsigned long long total = 1ULL << N;
    std::vector<char> in(static_cast<size_t>(N) + 1, 0);
    const int m = N / k;

    for (unsigned long long mask = 0; mask < total; ++mask) {
        int size = 0;
        for (int i = 1; i <= N; ++i) {
            in[static_cast<size_t>(i)] = (mask >> (i - 1)) & 1ULL;
            size += in[static_cast<size_t>(i)];
        }
        if (k <= N && clique_of_size(in, N, k + 1, nullptr)) continue;
        ++rep.clique_free;
        if (size > rep.max_size) {
            rep.max_size = size;
            best_mask = mask;
        }
        if (check_each && m >= 1) {
            std::vector<int> elems;
            for (int i = 1; i <= N; ++i)
                if (in[static_cast<size_t>(i)]) elems.push_back(i);
            DifferenceSet d{std::move(elems), N};
            const DensityReport dr = density_bound_check(d, k, m);
            if (!dr.inequality_holds || !dr.degree_bound_ok || !dr.strengthened_ok)
                rep.all_counts_hold = false;
        }
    }

    std::vector<int> witness_elems;
    for (int i = 1; i <= N; ++i)
        if ((best_mask >> (i - 1)) & 1ULL) witness_elems.push_back(i);
    rep.witness = DifferenceSet{std::move(witness_elems), N};
    rep.min_density = Rational(N - rep.max_size, N);
    rep.bound_ok = rep.min_density >= Rational(1, k) - Rational(k, N);
    return rep;
}

RotationReport rotation_densities(const RotationModel& model, long long N) {
    if (N < 1) throw std::invalid_argument("rotation_densities: need N >= 1");
    if (!(model.r > 0.0) || !(model.r < 1.0))
        throw std::invalid_argument("rotation_densities: need 0 < r < 1");
    RotationReport rep;
    rep.k = static_cast<int>(std::floor(1.0 / model.r));
    for (long long n = 1; n <= N; ++n) {
        double frac = std::fmod(static_cast<double>(n) * model.alpha, 1.0);
        if (frac < 0) frac += 1.0;
        const double dist = std::min(frac, 1.0 - frac);
        if (dist < model.r) ++rep.count;
    }
    rep.density = static_cast<double>(rep.count) / static_cast<double>(N);
    rep.bound_ok =
        rep.density >= 1.0 / rep.k - static_cast<double>(rep.k) / static_cast<double>(N);
    return rep;
}

}  // namespace lagconf
