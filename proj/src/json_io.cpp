#include "lagconf/json_io.hpp"

#include <stdexcept>

namespace lagconf {

Json json_of(const Rational& r) { return rational_to_string(r); }

Json json_of(const OrderBound& o) {
    if (!o.has_value()) return nullptr;
    return json_of(*o);
}

Json json_of(const NovikovScalar& x) {
    Json terms = Json::array();
    for (const auto& t : x.terms()) {
        Json jt;
        jt["exp"] = json_of(t.exp);
        jt["re"] = t.coeff.real();
        jt["im"] = t.coeff.imag();
        terms.push_back(std::move(jt));
    }
    Json j;
    j["terms"] = std::move(terms);
    j["order"] = json_of(x.order());
    return j;
}

NovikovScalar novikov_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("novikov_from_json: expected {terms: [...], order: ...}");
    std::vector<NovikovScalar::Term> terms;
    for (const auto& jt : j["terms"]) {
        NovikovScalar::Term t;
        t.exp = parse_rational(jt.at("exp").get<std::string>());
        t.coeff = Complex(jt.at("re").get<double>(), jt.at("im").get<double>());
        terms.push_back(t);
    }
    OrderBound order;
    if (j.contains("order") && !j["order"].is_null())
        order = parse_rational(j["order"].get<std::string>());
    return NovikovScalar(std::move(terms), order);
}

Json json_of(const LinkConfig& c) {
    Json j;
    j["k"] = c.k;
    j["B"] = json_of(c.B);
    j["C"] = json_of(c.C);
    j["a"] = json_of(c.a);
    return j;
}

LinkConfig config_from_json(const Json& j) {
    const int k = j.at("k").get<int>();
    const Rational B = parse_rational(j.at("B").get<std::string>());
    const Rational a = parse_rational(j.at("a").get<std::string>());
    LinkConfig c = make_config(k, B, a);
    if (j.contains("C")) {
        const Rational C = parse_rational(j.at("C").get<std::string>());
        if (C != c.C)
            throw std::invalid_argument("config_from_json: C inconsistent with k and B");
    }
    return c;
}

Json json_of(const PiecewisePoly& h) {
    Json pieces = Json::array();
    for (const auto& pc : h.pieces()) {
        Json jp;
        jp["lo"] = json_of(pc.lo);
        jp["hi"] = json_of(pc.hi);
        Json coeffs = Json::array();
        for (const auto& c : pc.coeffs) coeffs.push_back(json_of(c));
        jp["coeffs"] = std::move(coeffs);
        pieces.push_back(std::move(jp));
    }
    Json j;
    j["pieces"] = std::move(pieces);
    return j;
}

Json json_of(const CriticalPoint& pt) {
    Json j;
    Json p = Json::array(), q = Json::array(), rv = Json::array();
    for (const auto& s : pt.p) p.push_back(json_of(s));
    for (const auto& s : pt.q) q.push_back(json_of(s));
    for (const auto& v : pt.residual_valuations) rv.push_back(json_of(v));
    j["p"] = std::move(p);
    j["q"] = std::move(q);
    j["solved_order"] = json_of(pt.solved_order);
    j["residual_valuations"] = std::move(rv);
    return j;
}

Json json_of(const CalabiLimitReport& r) {
    Json j;
    Json table = Json::array();
    for (const auto& [k, v] : r.table) {
        Json row;
        row["k"] = k;
        row["tau"] = json_of(v);
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    j["candidate_integral"] = json_of(r.candidate_integral);
    j["candidate_riemann"] = json_of(r.candidate_riemann);
    j["empirical_limit"] = json_of(r.empirical_limit);
    j["rate_constant"] = r.rate_constant;
    j["discrepancy_integral"] = r.discrepancy_integral;
    j["discrepancy_riemann"] = r.discrepancy_riemann;
    j["matches"] = r.matches;
    return j;
}

Json json_of(const AxiomReport& r) {
    Json j;
    j["checks"] = r.checks;
    j["failures"] = r.failures;
    j["failure_notes"] = r.failure_notes;
    j["all_pass"] = r.all_pass();
    return j;
}

Json json_of(const FlatBoundReport& r) {
    Json j;
    j["x0"] = r.x0;
    j["bound"] = json_of(r.bound);
    j["best_x"] = json_of(r.best_x);
    Json by = Json::array();
    for (const auto& b : r.bounds_by_approximant) by.push_back(json_of(b));
    j["bounds_by_approximant"] = std::move(by);
    return j;
}

Json json_of(const URReport& r) {
    Json j;
    j["k"] = r.k;
    j["lower"] = json_of(r.lower);
    j["upper"] = json_of(r.upper);
    j["sharp"] = r.sharp;
    return j;
}

Json json_of(const KerCalabiReport& r) {
    Json j;
    j["lower"] = json_of(r.lower);
    j["calabi"] = json_of(r.calabi);
    return j;
}

Json json_of(const BiLipschitzReport& r) {
    Json j;
    j["C2"] = r.C2;
    j["grid_verified"] = r.grid_verified;
    return j;
}

Json json_of(const DifferenceSet& d) {
    Json j;
    j["elements"] = d.elements;
    j["N"] = d.N;
    return j;
}

Json json_of(const DensityReport& r) {
    Json j;
    j["k"] = r.k;
    j["m"] = r.m;
    j["precondition_failures"] = r.precondition_failures;
    j["clique"] = r.clique;
    j["q"] = r.q;
    j["max_blue_degree"] = r.max_blue_degree;
    j["degree_bound_ok"] = r.degree_bound_ok;
    j["blue_count"] = r.blue_count;
    j["inequality_holds"] = r.inequality_holds;
    j["strengthened_ok"] = r.strengthened_ok;
    j["ok"] = r.ok();
    return j;
}

Json json_of(const EnumReport& r) {
    Json j;
    j["min_density"] = json_of(r.min_density);
    j["witness"] = json_of(r.witness);
    j["witness_clique"] = maximum_clique(r.witness);
    j["max_size"] = r.max_size;
    j["clique_free"] = r.clique_free;
    j["bound_ok"] = r.bound_ok;
    j["all_counts_hold"] = r.all_counts_hold;
    return j;
}

Json json_of(const RotationReport& r) {
    Json j;
    j["count"] = r.count;
    j["density"] = r.density;
    j["k"] = r.k;
    j["bound_ok"] = r.bound_ok;
    return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lagconf
