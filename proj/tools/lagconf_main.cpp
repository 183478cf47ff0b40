#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "lagconf/json_io.hpp"
#include "lagconf/profile_grammar.hpp"

namespace {

using namespace lagconf;

// ---------------------------------------------------------------- output

struct OutputOpts {
    std::string format = "json";
    std::string path;
};

void add_output_opts(CLI::App* cmd, OutputOpts& o) {
    cmd->add_option("--format", o.format, "Output format (json or csv)")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", o.path, "Write the report to this file instead of stdout");
}

void emit(const OutputOpts& o, const std::string& text) {
    if (o.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + o.path);
    f << text;
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out.push_back(',');
        out += cells[i];
    }
    out.push_back('\n');
    return out;
}

std::string fmt_double(double v) {
    std::ostringstream ss;
    ss << std::setprecision(17) << v;
    return ss.str();
}

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- worker pool

int worker_count(std::size_t jobs) {
    long long cap = std::thread::hardware_concurrency();
    if (cap <= 0) cap = 4;
    if (const char* env = std::getenv("LAGCONF_WORKERS")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) cap = v;
    }
    if (cap > static_cast<long long>(jobs)) cap = static_cast<long long>(jobs);
    if (cap < 1) cap = 1;
    if (cap > 64) cap = 64;
    return static_cast<int>(cap);
}

/** Run fn(0..n-1) on a bounded pool; results land wherever fn writes them. */
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const int workers = worker_count(n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr err;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

// ---------------------------------------------------------------- parsing helpers

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    for (const std::string& tok : split_commas(s)) {
        if (tok.empty()) throw std::invalid_argument(std::string(what) + ": empty entry");
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": bad integer '" + tok + "'");
        }
        if (pos != tok.size())
            throw std::invalid_argument(std::string(what) + ": bad integer '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& s, const char* what) {
    std::vector<Rational> out;
    for (const std::string& tok : split_commas(s)) {
        if (tok.empty()) throw std::invalid_argument(std::string(what) + ": empty entry");
        out.push_back(parse_rational(tok));
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& s, const char* what) {
    std::vector<double> out;
    for (const std::string& tok : split_commas(s)) {
        if (tok.empty()) throw std::invalid_argument(std::string(what) + ": empty entry");
        std::size_t pos = 0;
        double v = 0;
        try {
            v = std::stod(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": bad number '" + tok + "'");
        }
        if (pos != tok.size())
            throw std::invalid_argument(std::string(what) + ": bad number '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

Rational default_area_param(int k, const Rational& B) {
    if (k == 1) return B / 2;
    const Rational C = (1 - 2 * B) / (k - 1);
    return (B - C) / 2;
}

// ---------------------------------------------------------------- superpotential

struct SuperArgs {
    int k = 2;
    std::string B, a, C;
    std::string signs;
    std::string order = "0";
    int root = 0;
    bool q_negative = false;
    std::string beta_exp;
    double beta_re = 1.0, beta_im = 0.0;
    std::string beta_order;
    std::string oracle_ts = "0.01,0.001";
    bool no_oracle = false;
    OutputOpts out;
};

int run_superpotential(const SuperArgs& A) {
    const LinkConfig cfg = make_config(A.k, parse_rational(A.B), parse_rational(A.a));
    if (!A.C.empty() && parse_rational(A.C) != cfg.C)
        throw std::invalid_argument("--C is inconsistent with k and B");
    const std::vector<int> signs = A.signs.empty()
                                       ? std::vector<int>(std::max(0, A.k - 1), 1)
                                       : parse_int_list(A.signs, "--signs");
    const Rational g_max = parse_rational(A.order);
    if (g_max < 0) throw std::invalid_argument("--order must be >= 0");

    NovikovScalar beta = NovikovScalar::zero();
    if (!A.beta_exp.empty()) {
        const Rational be = parse_rational(A.beta_exp);
        const Rational border =
            A.beta_order.empty() ? Rational(be + g_max + 1) : parse_rational(A.beta_order);
        beta = NovikovScalar::monomial(Complex(A.beta_re, A.beta_im), be).truncated(border);
    }

    const SuperpotentialData S = build_superpotential(cfg, signs, beta);
    const LeadingBranch branch{A.root, A.q_negative};
    const CriticalPoint lead = leading_solution(cfg, signs, branch);
    const CriticalPoint pt = g_max > 0 ? refine_critical_point(S, lead, g_max) : lead;

    struct OracleRow {
        double t;
        double max_abs_diff;
    };
    std::vector<OracleRow> oracle;
    if (!A.no_oracle) {
        for (double t : parse_double_list(A.oracle_ts, "--oracle-t")) {
            const auto ov = solve_numeric_oracle(S, t, branch);
            double diff = 0.0;
            for (int i = 0; i < cfg.k; ++i) {
                diff = std::max(diff, std::abs(pt.p[i].eval(t) - ov[i]));
                diff = std::max(diff, std::abs(pt.q[i].eval(t) - ov[cfg.k + i]));
            }
            oracle.push_back({t, diff});
        }
    }

    if (A.out.format == "csv") {
        std::string text = csv_row({"row", "index", "value"});
        for (std::size_t i = 0; i < pt.residual_valuations.size(); ++i) {
            const auto& v = pt.residual_valuations[i];
            text += csv_row({"residual_valuation", std::to_string(i),
                             v.has_value() ? rational_to_string(*v) : "inf"});
        }
        for (const auto& row : oracle)
            text += csv_row(
                {"oracle_max_abs_diff", fmt_double(row.t), fmt_double(row.max_abs_diff)});
        emit(A.out, text);
        return 0;
    }

    Json j;
    j["config"] = json_of(cfg);
    j["signs"] = signs;
    Json jb;
    jb["root_index"] = branch.root_index;
    jb["q_negative"] = branch.q_negative;
    j["branch"] = std::move(jb);
    j["solved_order"] = json_of(pt.solved_order);
    Json p = Json::array(), q = Json::array(), rv = Json::array();
    for (const auto& s : pt.p) p.push_back(json_of(s));
    for (const auto& s : pt.q) q.push_back(json_of(s));
    for (const auto& v : pt.residual_valuations) rv.push_back(json_of(v));
    j["p"] = std::move(p);
    j["q"] = std::move(q);
    j["residual_valuations"] = std::move(rv);
    Json jo = Json::array();
    for (const auto& row : oracle) {
        Json r;
        r["t"] = row.t;
        r["max_abs_diff"] = row.max_abs_diff;
        jo.push_back(std::move(r));
    }
    j["oracle"] = std::move(jo);
    emit(A.out, dump_json(j));
    return 0;
}

// ---------------------------------------------------------------- estimate

struct EstArgs {
    std::string kind;
    std::string ks;
    std::string B, a;
    int kp = 1;
    std::string Bp = "1/2";
    std::string profile;
    OutputOpts out;
};

int run_estimate(const EstArgs& A) {
    const PiecewisePoly h = parse_profile(A.profile);

    if (A.kind == "calabi") {
        const Rational value = calabi_radial(h);
        if (A.out.format == "csv") {
            std::string text = csv_row({"k", "B", "kind", "value"});
            text += csv_row({"", "", "calabi", rational_to_string(value)});
            emit(A.out, text);
            return 0;
        }
        Json j;
        j["kind"] = "calabi";
        j["profile"] = A.profile;
        j["value"] = json_of(value);
        emit(A.out, dump_json(j));
        return 0;
    }

    if (A.ks.empty()) throw std::invalid_argument("--k is required for kind " + A.kind);
    if (A.B.empty()) throw std::invalid_argument("--B is required for kind " + A.kind);
    const std::vector<int> ks = parse_int_list(A.ks, "--k");
    const Rational B = parse_rational(A.B);

    std::vector<Rational> values(ks.size());
    std::vector<LinkConfig> cfgs(ks.size());
    parallel_for(ks.size(), [&](std::size_t i) {
        const int k = ks[i];
        if (A.kind == "tau") {
            values[i] = tau(k, B, A.kp, parse_rational(A.Bp), h);
            return;
        }
        const Rational a = A.a.empty() ? default_area_param(k, B) : parse_rational(A.a);
        const LinkConfig cfg = make_config(k, B, a);
        cfgs[i] = cfg;
        if (A.kind == "zeta0") {
            values[i] = zeta0(cfg, h);
        } else if (A.kind == "mu0") {
            values[i] = mu0(cfg, h);
        } else if (A.kind == "sigma") {
            values[i] = sigma_integral(cfg, h);
        } else if (A.kind == "c0") {
            TimeDepRadial H;
            H.terms.push_back({PiecewisePoly::constant(Rational(1), Rational(0), Rational(1)), h});
            values[i] = c0_timedep(cfg, H);
        } else {
            throw std::invalid_argument("unknown estimate kind: " + A.kind);
        }
    });

    if (A.out.format == "csv") {
        std::string text = csv_row({"k", "B", "kind", "value"});
        for (std::size_t i = 0; i < ks.size(); ++i)
            text += csv_row({std::to_string(ks[i]), rational_to_string(B), A.kind,
                             rational_to_string(values[i])});
        emit(A.out, text);
        return 0;
    }

    if (ks.size() == 1) {
        Json j;
        j["kind"] = A.kind;
        if (A.kind == "tau") {
            j["k"] = ks[0];
            j["B"] = json_of(B);
            j["kp"] = A.kp;
            j["Bp"] = json_of(parse_rational(A.Bp));
        } else {
            j["config"] = json_of(cfgs[0]);
        }
        j["profile"] = A.profile;
        j["value"] = json_of(values[0]);
        emit(A.out, dump_json(j));
        return 0;
    }

    Json j;
    j["kind"] = A.kind;
    j["B"] = json_of(B);
    j["profile"] = A.profile;
    Json rows = Json::array();
    for (std::size_t i = 0; i < ks.size(); ++i) {
        Json r;
        r["k"] = ks[i];
        r["value"] = json_of(values[i]);
        rows.push_back(std::move(r));
    }
    j["results"] = std::move(rows);
    emit(A.out, dump_json(j));
    return 0;
}

// ---------------------------------------------------------------- tau-convergence

struct TauConvArgs {
    std::string B;
    std::string profile;
    int k_max = 100;
    OutputOpts out;
};

int run_tau_convergence(const TauConvArgs& A) {
    const CalabiLimitReport rep =
        calabi_limit(parse_rational(A.B), parse_profile(A.profile), A.k_max);
    if (A.out.format == "csv") {
        std::string text = csv_row({"k", "tau"});
        for (const auto& [k, v] : rep.table)
            text += csv_row({std::to_string(k), rational_to_string(v)});
        emit(A.out, text);
        return 0;
    }
    Json j;
    j["B"] = json_of(parse_rational(A.B));
    j["k_max"] = A.k_max;
    j["profile"] = A.profile;
    j.update(json_of(rep));
    emit(A.out, dump_json(j));
    return 0;
}

// ---------------------------------------------------------------- flat

struct FlatArgs {
    std::string profile;
    std::string a;
    int approximants = 40;
    long long max_denominator = 10000;
    OutputOpts out;
};

int run_flat(const FlatArgs& A) {
    const FlatBoundReport rep = flat_lower_bound(parse_profile(A.profile), parse_rational(A.a),
                                                 A.approximants, A.max_denominator);
    if (A.out.format == "csv") {
        std::string text = csv_row({"approximant", "bound"});
        for (std::size_t i = 0; i < rep.bounds_by_approximant.size(); ++i)
            text += csv_row(
                {std::to_string(i), rational_to_string(rep.bounds_by_approximant[i])});
        emit(A.out, text);
        return 0;
    }
    Json j;
    j["a"] = json_of(parse_rational(A.a));
    j["approximants"] = A.approximants;
    j["max_denominator"] = A.max_denominator;
    j.update(json_of(rep));
    emit(A.out, dump_json(j));
    return 0;
}

// ---------------------------------------------------------------- packing

struct PackArgs {
    std::string rs;
    std::string delta = "1/1000";
    OutputOpts out;
};

int run_packing(const PackArgs& A) {
    const std::vector<Rational> rs = parse_rational_list(A.rs, "--r");
    const Rational delta = parse_rational(A.delta);
    std::vector<URReport> reps(rs.size());
    parallel_for(rs.size(), [&](std::size_t i) { reps[i] = u_r(rs[i], delta); });

    if (A.out.format == "csv") {
        std::string text = csv_row({"r", "delta", "k", "lower", "upper", "sharp"});
        for (std::size_t i = 0; i < rs.size(); ++i)
            text += csv_row({rational_to_string(rs[i]), rational_to_string(delta),
                             std::to_string(reps[i].k), rational_to_string(reps[i].lower),
                             rational_to_string(reps[i].upper), fmt_bool(reps[i].sharp)});
        emit(A.out, text);
        return 0;
    }

    if (rs.size() == 1) {
        Json j;
        j["r"] = json_of(rs[0]);
        j["delta"] = json_of(delta);
        j.update(json_of(reps[0]));
        emit(A.out, dump_json(j));
        return 0;
    }
    Json j;
    j["delta"] = json_of(delta);
    Json rows = Json::array();
    for (std::size_t i = 0; i < rs.size(); ++i) {
        Json r;
        r["r"] = json_of(rs[i]);
        r.update(json_of(reps[i]));
        rows.push_back(std::move(r));
    }
    j["results"] = std::move(rows);
    emit(A.out, dump_json(j));
    return 0;
}

// ---------------------------------------------------------------- recurrence

struct RecEnumArgs {
    int k = 2;
    int window = 10;
    bool check_each = false;
    OutputOpts out;
};

int run_rec_enumerate(const RecEnumArgs& A) {
    const EnumReport rep = enumerate_and_verify(A.k, A.window, A.check_each);
    if (A.out.format == "csv") {
        std::string text = csv_row({"k", "window", "min_density", "max_size", "clique_free",
                                    "bound_ok", "all_counts_hold"});
        text += csv_row({std::to_string(A.k), std::to_string(A.window),
                         rational_to_string(rep.min_density), std::to_string(rep.max_size),
                         std::to_string(rep.clique_free), fmt_bool(rep.bound_ok),
                         fmt_bool(rep.all_counts_hold)});
        emit(A.out, text);
        return 0;
    }
    Json j;
    j["k"] = A.k;
    j["window"] = A.window;
    j.update(json_of(rep));
    emit(A.out, dump_json(j));
    return 0;
}

struct RecRotArgs {
    double alpha = 0.0;
    double r = 0.0;
    long long N = 100000;
    OutputOpts out;
};

int run_rec_rotation(const RecRotArgs& A) {
    const RotationReport rep = rotation_densities(RotationModel{A.alpha, A.r}, A.N);
    if (A.out.format == "csv") {
        std::string text = csv_row({"alpha", "r", "N", "count", "density", "k", "bound_ok"});
        text += csv_row({fmt_double(A.alpha), fmt_double(A.r), std::to_string(A.N),
                         std::to_string(rep.count), fmt_double(rep.density),
                         std::to_string(rep.k), fmt_bool(rep.bound_ok)});
        emit(A.out, text);
        return 0;
    }
    Json j;
    j["alpha"] = A.alpha;
    j["r"] = A.r;
    j["N"] = A.N;
    j.update(json_of(rep));
    emit(A.out, dump_json(j));
    return 0;
}

struct RecCheckArgs {
    std::string elements;
    int window = 10;
    int k = 2;
    int m = 1;
    OutputOpts out;
};

int run_rec_check(const RecCheckArgs& A) {
    const std::vector<int> elems =
        A.elements.empty() ? std::vector<int>{} : parse_int_list(A.elements, "--elements");
    const DifferenceSet d = make_difference_set(elems, A.window);
    const DensityReport rep = density_bound_check(d, A.k, A.m);
    if (A.out.format == "csv") {
        std::string text = csv_row({"k", "m", "q", "blue_count", "max_blue_degree",
                                    "inequality_holds", "degree_bound_ok", "strengthened_ok",
                                    "ok"});
        text += csv_row({std::to_string(rep.k), std::to_string(rep.m), std::to_string(rep.q),
                         std::to_string(rep.blue_count), std::to_string(rep.max_blue_degree),
                         fmt_bool(rep.inequality_holds), fmt_bool(rep.degree_bound_ok),
                         fmt_bool(rep.strengthened_ok), fmt_bool(rep.ok())});
        emit(A.out, text);
        return 0;
    }
    Json j;
    j["set"] = json_of(d);
    j.update(json_of(rep));
    emit(A.out, dump_json(j));
    return 0;
}

// ---------------------------------------------------------------- axioms

struct AxArgs {
    int k = 2;
    std::string B = "2/5";
    std::string a;
    int count = 200;
    unsigned long long seed = 12345;
    OutputOpts out;
};

int run_axioms(const AxArgs& A) {
    const Rational B = parse_rational(A.B);
    const Rational a = A.a.empty() ? default_area_param(A.k, B) : parse_rational(A.a);
    const LinkConfig cfg = make_config(A.k, B, a);
    const AxiomReport rep = axiom_suite(cfg, sample_profiles(A.count, A.seed));
    if (A.out.format == "csv") {
        std::string text = csv_row({"checks", "failures", "all_pass"});
        text += csv_row({std::to_string(rep.checks), std::to_string(rep.failures),
                         fmt_bool(rep.all_pass())});
        emit(A.out, text);
    } else {
        Json j;
        j["config"] = json_of(cfg);
        j["count"] = A.count;
        j["seed"] = A.seed;
        j.update(json_of(rep));
        emit(A.out, dump_json(j));
    }
    return rep.all_pass() ? 0 : 2;
}

// ---------------------------------------------------------------- config file

/** key=value lines; '#' starts a comment; keys gain a leading "--". */
std::vector<std::pair<std::string, std::string>> load_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open config file: " + path);
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    while (std::getline(f, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config file line is not key=value: " + line);
        std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw std::invalid_argument("config file line has an empty key");
        if (key.rfind("--", 0) != 0) key = "--" + key;
        out.emplace_back(key, value);
    }
    return out;
}

const char* kUsage =
    "usage: lagconf <subcommand> [options]\n"
    "subcommands:\n"
    "  superpotential   critical-point report for a circle configuration\n"
    "  estimate         spectral estimator values on a radial profile\n"
    "  tau-convergence  tau_k table and limit candidates\n"
    "  flat             Hofer lower bound via rational approximants\n"
    "  packing          asymptotic-norm value u(r) with packing upper bound\n"
    "  recurrence       difference-set enumeration, counting checks, rotations\n"
    "  axioms           randomized estimator axiom suite\n"
    "run 'lagconf <subcommand> --help' for options\n";

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);

    static const std::set<std::string> known = {"superpotential", "estimate", "tau-convergence",
                                                "flat",           "packing",  "recurrence",
                                                "axioms"};
    if (args.empty()) {
        std::cerr << kUsage;
        return 64;
    }
    if (!args[0].empty() && args[0][0] != '-' && known.count(args[0]) == 0) {
        std::cerr << "unknown subcommand '" << args[0] << "'\n" << kUsage;
        return 64;
    }

    // Splice config-file values in as trailing options (flags win: a key
    // already given on the command line is not appended again).
    try {
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (args[i] != "--config") continue;
            if (i + 1 >= args.size()) {
                std::cerr << "error: --config needs a path\n";
                return 1;
            }
            const std::string path = args[i + 1];
            args.erase(args.begin() + i, args.begin() + i + 2);
            for (const auto& [key, value] : load_config_file(path)) {
                bool present = false;
                for (const std::string& a : args)
                    if (a == key || a.rfind(key + "=", 0) == 0) present = true;
                if (present) continue;
                if (value == "true") {
                    args.push_back(key);  // bare flag
                } else {
                    args.push_back(key);
                    args.push_back(value);
                }
            }
            break;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    CLI::App app{"Lagrangian configuration toolkit"};
    app.require_subcommand(1);

    SuperArgs sa;
    CLI::App* sp = app.add_subcommand("superpotential",
                                      "Critical-point report for a circle configuration");
    sp->add_option("--k", sa.k, "Number of circles")->required();
    sp->add_option("--B", sa.B, "Cap area (rational)")->required();
    sp->add_option("--a", sa.a, "Second-factor area parameter (rational)")->required();
    sp->add_option("--C", sa.C, "Annulus area (checked against k and B)");
    sp->add_option("--signs", sa.signs, "Comma-separated +1/-1 entries (default all +1)");
    sp->add_option("--order", sa.order, "Refinement depth g_max (rational, default 0)");
    sp->add_option("--root", sa.root, "Leading-branch root index in [0, k]");
    sp->add_flag("--q-negative", sa.q_negative, "Take the uniform q = -1 branch");
    sp->add_option("--beta-exp", sa.beta_exp, "Bulk parameter exponent (rational)");
    sp->add_option("--beta-re", sa.beta_re, "Bulk parameter coefficient, real part");
    sp->add_option("--beta-im", sa.beta_im, "Bulk parameter coefficient, imaginary part");
    sp->add_option("--beta-order", sa.beta_order, "Truncation order for a nonzero beta");
    sp->add_option("--oracle-t", sa.oracle_ts, "Comma-separated t values for the oracle table");
    sp->add_flag("--no-oracle", sa.no_oracle, "Skip the numeric oracle comparison");
    add_output_opts(sp, sa.out);

    EstArgs ea;
    CLI::App* es = app.add_subcommand("estimate", "Spectral estimator values");
    es->add_option("kind", ea.kind, "One of zeta0, c0, mu0, sigma, tau, calabi")
        ->required()
        ->check(CLI::IsMember({"zeta0", "c0", "mu0", "sigma", "tau", "calabi"}));
    es->add_option("--k", ea.ks, "Circle count, or comma list for a sweep");
    es->add_option("--B", ea.B, "Cap area (rational)");
    es->add_option("--a", ea.a, "Second-factor area parameter (default (B-C)/2)");
    es->add_option("--kp", ea.kp, "Reference circle count for tau");
    es->add_option("--Bp", ea.Bp, "Reference cap area for tau");
    es->add_option("--profile", ea.profile, "Radial profile expression")->required();
    add_output_opts(es, ea.out);

    TauConvArgs ta;
    CLI::App* tc = app.add_subcommand("tau-convergence", "tau_k table and limit candidates");
    tc->add_option("--B", ta.B, "Cap area (rational)")->required();
    tc->add_option("--profile", ta.profile, "Radial profile expression")->required();
    tc->add_option("--k-max", ta.k_max, "Largest k sampled")->required();
    add_output_opts(tc, ta.out);

    FlatArgs fa;
    CLI::App* fl = app.add_subcommand("flat", "Hofer lower bound via rational approximants");
    fl->add_option("--profile", fa.profile, "Even profile supported in (-b, b), b < 1/6")
        ->required();
    fl->add_option("--a", fa.a, "Second-factor area parameter (rational)")->required();
    fl->add_option("--approximants", fa.approximants, "Number of rational approximants");
    fl->add_option("--max-denominator", fa.max_denominator, "Denominator cap");
    add_output_opts(fl, fa.out);

    PackArgs pa;
    CLI::App* pk = app.add_subcommand("packing", "Asymptotic-norm value u(r)");
    pk->add_option("--r", pa.rs, "Radius r in (1/(k+1), 1/k), or comma list")->required();
    pk->add_option("--delta", pa.delta, "Bump half-layout width (rational)");
    add_output_opts(pk, pa.out);

    CLI::App* rc = app.add_subcommand("recurrence", "Difference-set combinatorics");
    rc->require_subcommand(1);
    RecEnumArgs rea;
    CLI::App* ren = rc->add_subcommand("enumerate", "Exhaustive clique-free enumeration");
    ren->add_option("--k", rea.k, "Clique bound parameter")->required();
    ren->add_option("--window", rea.window, "Window size N (<= 22)")->required();
    ren->add_flag("--check-each", rea.check_each, "Run the counting check on every instance");
    add_output_opts(ren, rea.out);
    RecRotArgs rra;
    CLI::App* rro = rc->add_subcommand("rotation", "Rotation return-time densities");
    rro->add_option("--alpha", rra.alpha, "Rotation number")->required();
    rro->add_option("--r", rra.r, "Window radius in (0, 1)")->required();
    rro->add_option("--N", rra.N, "Orbit length");
    add_output_opts(rro, rra.out);
    RecCheckArgs rca;
    CLI::App* rch = rc->add_subcommand("check", "Counting check for one difference set");
    rch->add_option("--elements", rca.elements, "Comma-separated elements of D");
    rch->add_option("--window", rca.window, "Window size N")->required();
    rch->add_option("--k", rca.k, "Clique bound parameter")->required();
    rch->add_option("--m", rca.m, "Window multiplier")->required();
    add_output_opts(rch, rca.out);

    AxArgs aa;
    CLI::App* ax = app.add_subcommand("axioms", "Randomized estimator axiom suite");
    ax->add_option("--k", aa.k, "Circle count");
    ax->add_option("--B", aa.B, "Cap area (rational)");
    ax->add_option("--a", aa.a, "Second-factor area parameter");
    ax->add_option("--count", aa.count, "Number of random profiles");
    ax->add_option("--seed", aa.seed, "RNG seed");
    add_output_opts(ax, aa.out);

    int code = 0;
    sp->callback([&] { code = run_superpotential(sa); });
    es->callback([&] { code = run_estimate(ea); });
    tc->callback([&] { code = run_tau_convergence(ta); });
    fl->callback([&] { code = run_flat(fa); });
    pk->callback([&] { code = run_packing(pa); });
    ren->callback([&] { code = run_rec_enumerate(rea); });
    rro->callback([&] { code = run_rec_rotation(rra); });
    rch->callback([&] { code = run_rec_check(rca); });
    ax->callback([&] { code = run_axioms(aa); });

    std::vector<const char*> ptrs;
    ptrs.push_back(argv[0]);
    for (const std::string& a : args) ptrs.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(ptrs.size()), ptrs.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}
