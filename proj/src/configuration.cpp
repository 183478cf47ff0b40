#include "lagconf/configuration.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace lagconf {

LinkConfig make_config(int k, const Rational& B, const Rational& a) {
    if (k < 1) throw std::invalid_argument("make_config: k must be >= 1");
    LinkConfig c;
    c.k = k;
    c.B = B;
    c.a = a;
    if (k == 1) {
        if (B != Rational(1, 2))
            throw std::invalid_argument("make_config: k = 1 requires B = 1/2");
        c.C = 0;
        if (!(a > 0 && a < B))
            throw std::invalid_argument("make_config: need 0 < a < B");
        return c;
    }
    c.C = (1 - 2 * B) / (k - 1);
    if (!(c.C > 0))
        throw std::invalid_argument("make_config: need C = (1-2B)/(k-1) > 0, i.e. B < 1/2");
    if (!(c.C < B))
        throw std::invalid_argument("make_config: need C < B, i.e. B > 1/(k+1)");
    if (!(a > 0))
        throw std::invalid_argument("make_config: need a > 0");
    if (!(a < c.B - c.C))
        throw std::invalid_argument("make_config: need a < B - C");
    return c;
}

LevelMeasure levels(const LinkConfig& c) {
    LevelMeasure m;
    m.weight = Rational(1, c.k);
    m.atoms.reserve(c.k);
    for (int j = 1; j <= c.k; ++j)
        m.atoms.push_back(Rational(-1, 2) + c.B + (j - 1) * c.C);
    return m;
}

bool linear_matching_property(int k, const Rational& B, const Rational& C) {
    if (!(B > 0 && C > 0))
        throw std::invalid_argument("linear_matching_property: B, C must be positive");
    if (2 * B + (k - 1) * C != 1)
        throw std::invalid_argument("linear_matching_property: 2B + (k-1)C = 1 violated");
    return B > C;
}

void validate_tree(const WeightedTree& t) {
    const int n = t.vertex_count;
    if (n <= 0) throw std::invalid_argument("WeightedTree: empty");
    if (static_cast<int>(t.weights.size()) != n)
        throw std::invalid_argument("WeightedTree: weight count mismatch");
    if (static_cast<int>(t.edges.size()) != n - 1)
        throw std::invalid_argument("WeightedTree: a tree on n vertices has n-1 edges");
    Rational total = 0;
    for (const Rational& w : t.weights) {
        if (!(w > 0)) throw std::invalid_argument("WeightedTree: weights must be positive");
        total += w;
    }
    if (total != 1) throw std::invalid_argument("WeightedTree: weights must sum to 1");
    // Connectivity via union-find; acyclicity then follows from the edge count.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : t.edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("WeightedTree: edge endpoint out of range");
        int ru = find(u), rv = find(v);
        if (ru == rv) throw std::invalid_argument("WeightedTree: cycle detected");
        parent[ru] = rv;
    }
}

}  // namespace lagconf
