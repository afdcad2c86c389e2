#include "clusterdyn/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "clusterdyn/verify.hpp"

namespace clusterdyn {

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw Error("empty entry in list '" + s + "'");
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw Error("empty list");
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::from_string(item));
    if (out.empty()) throw Error("empty list");
    return out;
}

void write_json(const std::string& path, const json& j) {
    std::ofstream f(path);
    if (!f) throw Error("cannot open output file " + path);
    f << j.dump(2) << "\n";
}

void print_seed(std::ostream& out, const Seed& s) {
    out << "indices:";
    for (int i : s.indices) out << " " << i;
    out << "\nfrozen:";
    for (int i : s.frozen) out << " " << i;
    out << "\nd:";
    for (long v : s.d) out << " " << v;
    out << "\nB:\n";
    for (const auto& row : s.B) {
        out << " ";
        for (const auto& v : row) out << " " << v.str();
        out << "\n";
    }
}

bool debug_log() {
    const char* v = std::getenv("CLUSTER_DYN_LOG");
    return v != nullptr && std::string(v) == "debug";
}

struct SeedChoice {
    Seed seed;
    bool is_glued = false;
    SigmaC glued;  // valid when is_glued
};

SeedChoice choose_seed(const std::string& type, const std::string& word_csv,
                       bool sigma_c) {
    SeedChoice ch;
    auto c = catalog(type);
    if (!word_csv.empty()) {
        if (sigma_c) throw Error("--word and --sigma-c are mutually exclusive");
        DoubleReducedWord w{c, parse_int_list(word_csv)};
        ch.seed = build_word_seed(w);
        return ch;
    }
    ch.glued = build_sigma_c(c);
    ch.seed = ch.glued.seed;
    ch.is_glued = true;
    return ch;
}

int run_verify(const std::string& name, int max_rank, int affine_rank, int n,
               long trials, long steps, long points, int depth,
               unsigned long long seed, const std::string& json_path,
               std::ostream& out, std::ostream& err) {
    std::vector<Report> reports;
    auto dflt = [](long v, long d) { return v < 0 ? d : v; };
    if (name == "sigma-period") {
        reports.push_back(verify_sigma_period(max_rank, affine_rank));
    } else if (name == "amalgamation") {
        reports.push_back(verify_amalgamation(max_rank));
    } else if (name == "bmatrix-blocks") {
        reports.push_back(verify_bmatrix_blocks(max_rank));
    } else if (name == "coxeter-identity") {
        reports.push_back(verify_coxeter_identity(max_rank, affine_rank));
    } else if (name == "q-vs-cluster") {
        reports.push_back(verify_q_vs_cluster(depth < 0 ? 4 : depth,
                                              12, max_rank,
                                              static_cast<int>(dflt(points, 20)), seed));
    } else if (name == "twist") {
        reports.push_back(verify_twist(n, dflt(trials, 100), seed));
    } else if (name == "ensemble") {
        reports.push_back(verify_ensemble(n, dflt(trials, 50), seed));
    } else if (name == "factorization-conservation") {
        reports.push_back(verify_factorization_conservation(n, dflt(steps, 50),
                                                            dflt(points, 50), seed));
    } else if (name == "laurent") {
        reports.push_back(verify_laurent(dflt(trials, 200), 8,
                                         max_rank > 3 ? 3 : max_rank, seed));
    } else {
        err << "unknown verification '" << name << "'\n";
        return 2;
    }
    bool all_ok = true;
    for (const auto& r : reports) {
        out << r.summary() << "\n";
        all_ok = all_ok && r.ok();
    }
    if (!json_path.empty()) {
        if (reports.size() == 1) {
            write_json(json_path, reports[0].to_json());
        } else {
            json j = json::array();
            for (const auto& r : reports) j.push_back(r.to_json());
            write_json(json_path, j);
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"Exact cluster-algebra dynamics: seeds, Q-systems, "
                 "factorization orbits, and identity verification"};
    app.require_subcommand(1);

    std::string type = "A2", word_csv, json_path, init_csv, seq_csv, verify_name;
    bool sigma_c = false, unnormalized = false;
    int max_rank = 8, affine_rank = 5, n = 2, depth = -1;
    long trials = -1, steps = -1, points = -1;
    unsigned long long rng_seed = 1;

    auto* cmd_seed = app.add_subcommand("seed", "print a seed");
    cmd_seed->add_option("--type", type, "type tag, e.g. A2, B3, A1~, A5(2)");
    cmd_seed->add_flag("--sigma-c", sigma_c, "the glued 2r-index seed (default)");
    cmd_seed->add_option("--word", word_csv, "double word entries, e.g. -1,-2,1,2");
    cmd_seed->add_option("--json", json_path, "write the seed as JSON to this file");

    auto* cmd_mutate = app.add_subcommand("mutate", "mutate a seed along a sequence");
    cmd_mutate->add_option("--type", type, "type tag");
    cmd_mutate->add_flag("--sigma-c", sigma_c, "start from the glued seed (default)");
    cmd_mutate->add_option("--word", word_csv, "start from this double word's seed");
    cmd_mutate->add_option("--seq", seq_csv, "mutation sequence, e.g. 1,2,1")->required();
    cmd_mutate->add_option("--json", json_path, "write the result as JSON");

    auto* cmd_q = app.add_subcommand("qsystem", "run a Q-system orbit");
    cmd_q->add_option("--type", type, "affine or finite tag, e.g. A1~, D4(3), B2");
    cmd_q->add_option("--init", init_csv, "layers 0 and 1, e.g. 1,1 for rank 1")
        ->required();
    cmd_q->add_option("--steps", steps, "highest level to compute")->required();
    cmd_q->add_flag("--unnormalized", unnormalized, "plain (minus-sign) recurrence");
    cmd_q->add_option("--json", json_path, "write the orbit as JSON");

    auto* cmd_orbit = app.add_subcommand("orbit", "factorization orbit on X-coordinates");
    cmd_orbit->add_option("--type", type, "finite type A tag, e.g. A2");
    cmd_orbit->add_option("--init", init_csv, "initial X values (2r entries)");
    cmd_orbit->add_option("--steps", steps, "number of steps")->required();
    cmd_orbit->add_option("--seed", rng_seed, "random seed when --init is omitted");
    cmd_orbit->add_option("--json", json_path, "write the orbit as JSON");

    auto* cmd_verify = app.add_subcommand("verify", "run a verification driver");
    cmd_verify
        ->add_option("name", verify_name,
                     "one of: sigma-period, amalgamation, bmatrix-blocks, "
                     "coxeter-identity, q-vs-cluster, twist, ensemble, "
                     "factorization-conservation, laurent")
        ->required();
    cmd_verify->add_option("--type", type, "accepted for compatibility (all-finite)");
    cmd_verify->add_option("--max-rank", max_rank, "largest finite rank covered");
    cmd_verify->add_option("--affine-rank", affine_rank, "largest affine rank covered");
    cmd_verify->add_option("--n", n, "matrix size for group-level checks");
    cmd_verify->add_option("--trials", trials, "number of random trials");
    cmd_verify->add_option("--steps", steps, "orbit length");
    cmd_verify->add_option("--points", points, "number of sampled points");
    cmd_verify->add_option("--depth", depth, "symbolic comparison depth");
    cmd_verify->add_option("--seed", rng_seed, "random seed (recorded in the report)");
    cmd_verify->add_option("--json", json_path, "write the report as JSON");

    std::vector<const char*> argv{"clusterdyn"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return e.get_exit_code() == 0 ? 1 : e.get_exit_code();
    }

    try {
        if (app.got_subcommand(cmd_seed)) {
            SeedChoice ch = choose_seed(type, word_csv, sigma_c);
            print_seed(out, ch.seed);
            if (ch.is_glued) {
                out << "sequence:";
                for (int k : ch.glued.mutation_sequence) out << " " << k;
                out << "\nsigma: i <-> i+" << catalog(type).rank << "\n";
            }
            if (!json_path.empty()) write_json(json_path, ch.seed.to_json());
            return 0;
        }
        if (app.got_subcommand(cmd_mutate)) {
            SeedChoice ch = choose_seed(type, word_csv, sigma_c);
            Seed m = mutate_B(ch.seed, parse_int_list(seq_csv));
            print_seed(out, m);
            if (!json_path.empty()) write_json(json_path, m.to_json());
            return 0;
        }
        if (app.got_subcommand(cmd_q)) {
            auto spec = make_qsystem(type);
            int r = spec.cartan.rank;
            auto init = parse_rational_list(init_csv);
            if (static_cast<int>(init.size()) != 2 * r)
                throw Error("--init needs " + std::to_string(2 * r) + " values for " +
                            type);
            QState st;
            st.normalized = !unnormalized;
            for (int a = 1; a <= r; ++a) {
                st.lower[a] = init[a - 1];
                st.upper[a] = init[r + a - 1];
            }
            if (steps < 1) throw Error("--steps must be >= 1");
            std::vector<std::vector<Rational>> table;
            auto layer_of = [&](const std::map<int, Rational>& l) {
                std::vector<Rational> row;
                for (int a = 1; a <= r; ++a) row.push_back(l.at(a));
                return row;
            };
            table.push_back(layer_of(st.lower));
            table.push_back(layer_of(st.upper));
            int rc = 0;
            try {
                for (long k = 2; k <= steps; ++k) {
                    st = q_step(spec, st, QDirection::forward, !unnormalized);
                    table.push_back(layer_of(st.upper));
                }
            } catch (const Error& e) {
                err << "orbit terminated: " << e.what() << "\n";
                rc = 1;
            }
            json jorbit = json::array();
            for (const auto& row : table) {
                std::string line;
                json jrow = json::array();
                for (const auto& v : row) {
                    if (!line.empty()) line += ",";
                    line += v.str();
                    jrow.push_back(v.str());
                }
                out << line << "\n";
                jorbit.push_back(jrow);
            }
            if (!json_path.empty())
                write_json(json_path, json{{"type", type}, {"orbit", jorbit}});
            return rc;
        }
        if (app.got_subcommand(cmd_orbit)) {
            auto c = catalog(type);
            SigmaC sc = build_sigma_c(c);
            std::map<int, Rational> x;
            if (!init_csv.empty()) {
                auto init = parse_rational_list(init_csv);
                if (static_cast<int>(init.size()) != 2 * c.rank)
                    throw Error("--init needs " + std::to_string(2 * c.rank) + " values");
                for (int i = 1; i <= 2 * c.rank; ++i) x[i] = init[i - 1];
            } else {
                Sampler rng(rng_seed);
                for (int i = 1; i <= 2 * c.rank; ++i) x[i] = rng.positive_rational();
            }
            auto invariants = invariant_ratios(sigma_c_group_element(c, x));
            out << "invariants:";
            for (const auto& v : invariants) out << " " << v.str();
            out << "\n";
            json jorbit = json::array();
            int rc = 0;
            try {
                for (long k = 0; k <= steps; ++k) {
                    std::string line;
                    json jrow = json::array();
                    for (int i = 1; i <= 2 * c.rank; ++i) {
                        if (!line.empty()) line += ",";
                        line += x.at(i).str();
                        jrow.push_back(x.at(i).str());
                    }
                    out << line << "\n";
                    jorbit.push_back(jrow);
                    if (k < steps) {
                        x = factorization_step(sc, x);
                        if (debug_log()) err << "step " << k + 1 << " done\n";
                        if (invariant_ratios(sigma_c_group_element(c, x)) != invariants)
                            throw Error("invariant drift at step " + std::to_string(k + 1));
                    }
                }
            } catch (const Error& e) {
                err << "orbit terminated: " << e.what() << "\n";
                rc = 1;
            }
            if (!json_path.empty())
                write_json(json_path, json{{"type", type}, {"orbit", jorbit}});
            return rc;
        }
        if (app.got_subcommand(cmd_verify)) {
            return run_verify(verify_name, max_rank, affine_rank, n, trials, steps,
                              points, depth, rng_seed, json_path, out, err);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace clusterdyn
