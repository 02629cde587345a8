// Command-line front end for the znz library: normal forms, group
// arithmetic, conjugacy decision/search, the matrix orbit problem,
// brute-force oracles, and a benchmark harness.
//
// Exit codes: 0 positive answer / success, 1 negative answer,
// 2 usage or parse error, 3 undecided at precision, 4 time budget
// exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "znz/bench.hpp"
#include "znz/conjugacy.hpp"
#include "znz/json_io.hpp"
#include "znz/oracle.hpp"
#include "znz/orbit.hpp"
#include "znz/parse.hpp"

namespace {

using namespace znz;

struct CommonOpts {
    std::string group_path;
    bool json = false;
    bool trace = false;
    double time_budget = -1.0;
    long precision = 256;
};

std::optional<Deadline> make_deadline(const CommonOpts& c) {
    if (c.time_budget < 0) return std::nullopt;
    return Deadline::after_seconds(c.time_budget);
}

GroupElement parse_and_realize(const AbcGroup& g, const std::string& text) {
    return realize(g, parse_element(text));
}

IntMatrix matrix_from_json_file_checked(const std::string& path) {
    IntMatrix a = load_matrix_file(path);
    if (!a.is_square()) throw UsageError("matrix file must contain a square matrix");
    return a;
}

void emit_element(const CommonOpts& c, const GroupElement& e) {
    if (c.json) {
        std::cout << element_to_json(e).dump() << "\n";
    } else {
        std::cout << format_element(e) << "\n";
    }
}

int run_normalize(const CommonOpts& c, const std::string& word) {
    AbcGroup g = load_group_file(c.group_path);
    emit_element(c, parse_and_realize(g, word));
    return 0;
}

int run_mul(const CommonOpts& c, const std::string& lhs, const std::string& rhs) {
    AbcGroup g = load_group_file(c.group_path);
    emit_element(c, multiply(g, parse_and_realize(g, lhs), parse_and_realize(g, rhs)));
    return 0;
}

int run_inv(const CommonOpts& c, const std::string& arg) {
    AbcGroup g = load_group_file(c.group_path);
    emit_element(c, inverse(g, parse_and_realize(g, arg)));
    return 0;
}

int run_conj(const CommonOpts& c, const std::string& us, const std::string& vs) {
    AbcGroup g = load_group_file(c.group_path);
    GroupElement u = parse_and_realize(g, us);
    GroupElement v = parse_and_realize(g, vs);
    auto deadline = make_deadline(c);
    ConjugacyOutcome out = conjugacy(g, u, v, deadline ? &*deadline : nullptr);
    if (out.conjugate()) {
        // independent re-verification before anything is printed
        if (!(conjugate(g, *out.witness, u) == v)) {
            throw std::logic_error("witness failed re-verification");
        }
    }
    if (c.json) {
        std::cout << outcome_to_json(out).dump() << "\n";
    } else if (out.conjugate()) {
        std::cout << "conjugate, witness " << format_element(*out.witness) << "\n";
    } else {
        std::cout << "not conjugate\n";
    }
    return out.conjugate() ? 0 : 1;
}

int run_orbit(const CommonOpts& c, const std::string& matrix_path, const std::string& xs,
              const std::string& ys) {
    IntMatrix a = matrix_from_json_file_checked(matrix_path);
    IntVector x{parse_int_vector(xs)};
    IntVector y{parse_int_vector(ys)};
    auto deadline = make_deadline(c);
    OrbitCertificateTrace trace;
    OrbitOptions opts;
    opts.precision = c.precision;
    opts.deadline = deadline ? &*deadline : nullptr;
    if (c.trace) opts.trace = &trace;
    OrbitOutcome out = orbit(a, x, y, opts);
    if (c.json) {
        json j = orbit_outcome_to_json(out);
        if (c.trace) j["trace"] = trace_to_json(trace);
        std::cout << j.dump() << "\n";
    } else {
        if (out.found()) {
            std::cout << "exponent " << to_string(*out.exponent) << "\n";
        } else {
            std::cout << "no exponent\n";
        }
        if (c.trace) std::cerr << trace_to_json(trace).dump() << "\n";
    }
    return out.found() ? 0 : 1;
}

int run_order(const CommonOpts& c) {
    AbcGroup g = load_group_file(c.group_path);
    const OrderResult& ord = g.order();
    if (c.json) {
        json j = ord.is_finite() ? json{{"finite", true}, {"order", int_to_json(ord.order())}}
                                 : json{{"finite", false}};
        std::cout << j.dump() << "\n";
    } else if (ord.is_finite()) {
        std::cout << "finite " << to_string(ord.order()) << "\n";
    } else {
        std::cout << "infinite\n";
    }
    return 0;
}

int run_oracle_conj(const CommonOpts& c, const std::string& us, const std::string& vs,
                    std::int64_t coord_bound, std::int64_t exp_bound) {
    AbcGroup g = load_group_file(c.group_path);
    GroupElement u = parse_and_realize(g, us);
    GroupElement v = parse_and_realize(g, vs);
    auto found = brute_conjugacy(g, u, v, coord_bound, exp_bound);
    if (c.json) {
        json j = found ? json{{"found", true}, {"witness", element_to_json(*found)}}
                       : json{{"found", false}};
        std::cout << j.dump() << "\n";
    } else if (found) {
        std::cout << "found conjugator " << format_element(*found) << "\n";
    } else {
        std::cout << "no conjugator within bounds (not a proof of non-conjugacy)\n";
    }
    return found ? 0 : 1;
}

int run_oracle_orbit(const CommonOpts& c, const std::string& matrix_path, const std::string& xs,
                     const std::string& ys, std::int64_t exp_bound) {
    IntMatrix a = matrix_from_json_file_checked(matrix_path);
    IntVector x{parse_int_vector(xs)};
    IntVector y{parse_int_vector(ys)};
    auto found = brute_orbit(a, x, y, exp_bound);
    if (c.json) {
        json j = found ? json{{"found", true}, {"exponent", int_to_json(*found)}}
                       : json{{"found", false}};
        std::cout << j.dump() << "\n";
    } else if (found) {
        std::cout << "exponent " << to_string(*found) << "\n";
    } else {
        std::cout << "no exponent within bounds (not a proof)\n";
    }
    return found ? 0 : 1;
}

int run_bench(const CommonOpts& c, const BenchConfig& cfg) {
    auto deadline = make_deadline(c);
    std::cout << kBenchCsvHeader << "\n";
    run_bench(cfg, deadline ? &*deadline : nullptr,
              [](const BenchRecord& r) { write_csv_row(std::cout, r); });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"conjugacy decision and search in free abelian-by-cyclic groups Z^n x| Z"};
    app.require_subcommand(1);

    CommonOpts common;
    auto add_common = [&](CLI::App* sub, bool with_group) {
        if (with_group) {
            sub->add_option("-g,--group", common.group_path, "group file {\"n\":..,\"phi\":[[..]]}")
                ->required();
        }
        sub->add_flag("--json", common.json, "machine-readable output");
        sub->add_option("--time-budget", common.time_budget, "abort after this many seconds (exit 4)");
        return sub;
    };

    std::string arg1, arg2, arg3;

    auto* cmd_normalize = add_common(app.add_subcommand("normalize", "collect a word into normal form"), true);
    cmd_normalize->add_option("word", arg1, "element literal or free word");

    auto* cmd_mul = add_common(app.add_subcommand("mul", "product of two elements"), true);
    cmd_mul->add_option("lhs", arg1)->required();
    cmd_mul->add_option("rhs", arg2)->required();

    auto* cmd_inv = add_common(app.add_subcommand("inv", "inverse of an element"), true);
    cmd_inv->add_option("element", arg1)->required();

    auto* cmd_conj = add_common(app.add_subcommand("conj", "decide conjugacy and search for a witness"), true);
    cmd_conj->add_option("u", arg1)->required();
    cmd_conj->add_option("v", arg2)->required();

    auto* cmd_orbit = add_common(app.add_subcommand("orbit", "decide whether A^e x = y for some integer e"), false);
    cmd_orbit->add_option("matrix", arg1, "JSON matrix file")->required();
    cmd_orbit->add_option("x", arg2)->required();
    cmd_orbit->add_option("y", arg3)->required();
    cmd_orbit->add_flag("--trace", common.trace, "emit the decision trace");
    cmd_orbit->add_option("--precision", common.precision, "starting precision in bits (default 256)");

    auto* cmd_order = add_common(app.add_subcommand("order", "order of the defining automorphism"), true);

    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force reference searches");
    cmd_oracle->require_subcommand(1);
    std::int64_t coord_bound = 0, exp_bound = 0;
    auto* cmd_oracle_conj = add_common(cmd_oracle->add_subcommand("conj", "bounded conjugator search"), true);
    cmd_oracle_conj->add_option("u", arg1)->required();
    cmd_oracle_conj->add_option("v", arg2)->required();
    cmd_oracle_conj->add_option("--coord-bound", coord_bound, "max ||b||_inf")->required();
    cmd_oracle_conj->add_option("--exp-bound", exp_bound, "max |e|")->required();
    auto* cmd_oracle_orbit = add_common(cmd_oracle->add_subcommand("orbit", "bounded exponent search"), false);
    cmd_oracle_orbit->add_option("matrix", arg1)->required();
    cmd_oracle_orbit->add_option("x", arg2)->required();
    cmd_oracle_orbit->add_option("y", arg3)->required();
    cmd_oracle_orbit->add_option("--exp-bound", exp_bound, "max |e|")->required();

    auto* cmd_bench = add_common(app.add_subcommand("bench", "timing harness, CSV on stdout"), false);
    BenchConfig bench_cfg;
    std::vector<long> n_list{2}, s_list{10};
    cmd_bench->add_option("--n-list", n_list, "dimensions")->delimiter(',');
    cmd_bench->add_option("--s-list", s_list, "t-exponents |s|")->delimiter(',');
    cmd_bench->add_option("--trials", bench_cfg.trials, "trials per configuration");
    cmd_bench->add_option("--seed", bench_cfg.seed, "master seed");
    cmd_bench->add_option("--coord-bound", bench_cfg.coord_bound, "coordinate bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_normalize) return run_normalize(common, arg1);
        if (*cmd_mul) return run_mul(common, arg1, arg2);
        if (*cmd_inv) return run_inv(common, arg1);
        if (*cmd_conj) return run_conj(common, arg1, arg2);
        if (*cmd_orbit) return run_orbit(common, arg1, arg2, arg3);
        if (*cmd_order) return run_order(common);
        if (*cmd_oracle_conj) return run_oracle_conj(common, arg1, arg2, coord_bound, exp_bound);
        if (*cmd_oracle_orbit) return run_oracle_orbit(common, arg1, arg2, arg3, exp_bound);
        if (*cmd_bench) {
            bench_cfg.n_values = n_list;
            bench_cfg.s_values = s_list;
            return run_bench(common, bench_cfg);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PrecisionError& e) {
        std::cerr << "undecided at precision: " << e.what() << "\n";
        return 3;
    } catch (const TimeBudgetError& e) {
        std::cerr << "time budget exceeded\n";
        std::cerr << znz::json{{"error", "time budget exceeded"}, {"progress", e.detail}}.dump()
                  << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 2;
}
