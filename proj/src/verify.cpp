#include "clusterdyn/verify.hpp"

#include <cmath>
#include <functional>

namespace clusterdyn {

json Report::to_json() const {
    json j;
    j["name"] = name;
    j["trials"] = trials;
    j["passes"] = passes;
    j["genericity_retries"] = genericity_retries;
    j["first_failure"] = first_failure;
    j["rng_seed"] = rng_seed;
    return j;
}

std::string Report::summary() const {
    std::string s = ok() ? "[PASS] " : "[FAIL] ";
    s += name + ": " + std::to_string(passes) + "/" + std::to_string(trials) +
         " checks";
    if (genericity_retries > 0)
        s += ", " + std::to_string(genericity_retries) + " genericity retries";
    if (!first_failure.empty()) s += "; first failure: " + first_failure;
    return s;
}

namespace {

// Record one check outcome; remembers the first failure message.
void tally(Report& rep, bool pass, const std::string& what) {
    ++rep.trials;
    if (pass)
        ++rep.passes;
    else if (rep.first_failure.empty())
        rep.first_failure = what;
}

void tally_run(Report& rep, const std::string& what, const std::function<bool()>& f) {
    try {
        tally(rep, f(), what);
    } catch (const std::exception& e) {
        tally(rep, false, what + " threw: " + e.what());
    }
}

std::vector<std::string> all_tags(int max_finite_rank, int max_affine_rank) {
    std::vector<std::string> tags = finite_tags(max_finite_rank);
    for (const auto& t : affine_tags(max_affine_rank)) tags.push_back(t);
    return tags;
}

}  // namespace

Report verify_sigma_period(int max_finite_rank, int max_affine_rank) {
    Report rep;
    rep.name = "sigma-period";
    for (const auto& tag : all_tags(max_finite_rank, max_affine_rank)) {
        tally_run(rep, tag, [&] {
            SigmaC sc = build_sigma_c(catalog(tag));
            return check_sigma_period(sc.seed, sc.mutation_sequence, sc.sigma);
        });
    }
    return rep;
}

Report verify_amalgamation(int max_rank) {
    Report rep;
    rep.name = "amalgamation";
    for (const auto& tag : finite_tags(max_rank)) {
        auto c = catalog(tag);
        AmalgamationMap pi = coxeter_amalgamation(c);
        tally_run(rep, tag + " gluing", [&] {
            return amalgamate(build_word_seed(coxeter_double_word(c)), pi) ==
                   build_sigma_c(c).seed;
        });
        tally_run(rep, tag + " prefix chain", [&] {
            Seed s = build_word_seed(coxeter_double_word(c));
            for (int k = 1; k <= c.rank; ++k) {
                if (!check_amalgamation_commutes(s, pi, k)) return false;
                s = mutate_B(s, k);
            }
            return true;
        });
    }
    return rep;
}

Report verify_bmatrix_blocks(int max_rank) {
    Report rep;
    rep.name = "bmatrix-blocks";
    for (const auto& tag : finite_tags(max_rank)) {
        tally_run(rep, tag, [&] {
            auto c = catalog(tag);
            return to_qmatrix(build_word_seed(coxeter_double_word(c)).B) ==
                   lemma_block_matrix(c);
        });
    }
    return rep;
}

Report verify_coxeter_identity(int max_finite_rank, int max_affine_rank) {
    Report rep;
    rep.name = "coxeter-identity";
    for (const auto& tag : all_tags(max_finite_rank, max_affine_rank))
        tally_run(rep, tag, [&] { return check_coxeter_identity(catalog(tag)); });
    return rep;
}

Report verify_q_vs_cluster(int symbolic_depth, int numeric_depth, int max_rank,
                           int points, unsigned long long seed) {
    Report rep;
    rep.name = "q-vs-cluster";
    rep.rng_seed = static_cast<long long>(seed);
    Sampler rng(seed);
    for (const char* tag : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "G2"}) {
        tally_run(rep, std::string(tag) + " symbolic", [&] {
            auto r = q_vs_cluster(make_qsystem(tag), symbolic_depth);
            return r.ok;
        });
    }
    for (const auto& tag : finite_tags(max_rank)) {
        auto spec = make_qsystem(tag);
        for (int p = 0; p < points; ++p) {
            QState st;
            for (int a = 1; a <= spec.cartan.rank; ++a) {
                st.lower[a] = rng.positive_rational();
                st.upper[a] = rng.positive_rational();
            }
            tally_run(rep, tag + " numeric point " + std::to_string(p), [&] {
                return q_vs_cluster_numeric(spec, numeric_depth, st).ok;
            });
        }
    }
    return rep;
}

namespace {

// Monomial with integer exponent row `i` of `mat` over values keyed by labels.
Rational monomial_row(const QMatrix& mat, size_t i, const std::vector<int>& labels,
                      const std::map<int, Rational>& vals, long scale = 1) {
    Rational r(1);
    for (size_t j = 0; j < labels.size(); ++j) {
        long e = (mat.at(i, j) * Rational(scale)).to_long();
        if (e != 0) r *= vals.at(labels[j]).pow(e);
    }
    return r;
}

bool all_nonzero(const std::map<int, Rational>& vals) {
    for (const auto& [k, v] : vals)
        if (v.is_zero()) return false;
    return true;
}

}  // namespace

Report verify_twist(int n, long trials, unsigned long long seed) {
    if (n < 2) throw Error("verify_twist: n must be >= 2");
    Report rep;
    rep.name = "twist(n=" + std::to_string(n) + ")";
    rep.rng_seed = static_cast<long long>(seed);
    Sampler rng(seed);
    auto c = catalog("A" + std::to_string(n - 1));
    auto w = coxeter_double_word(c);
    Seed s0 = build_word_seed(w);
    QMatrix M = twist_matrix_M(c);
    std::vector<int> labels = w.index_labels();
    std::vector<int> cword = coxeter_word(c);
    size_t nn = static_cast<size_t>(n);

    for (long t = 0; t < trials; ++t) {
        bool done = false;
        for (int attempt = 0; attempt < 100 && !done; ++attempt) {
            try {
                // random det-1 element of the Coxeter cell:
                // h * F_1(t_1)...F_r(t_r) * E_1(s_1)...E_r(s_r)
                Matrix<Rational> g = Matrix<Rational>::identity(nn, Rational(1));
                Rational prod(1);
                for (int i = 1; i < n; ++i) {
                    Rational h = rng.positive_rational();
                    g.at(i - 1, i - 1) = h;
                    prod *= h;
                }
                g.at(nn - 1, nn - 1) = prod.inverse();
                for (int i = 1; i < n; ++i)
                    g = g * elem_F(nn, i, rng.positive_rational());
                for (int i = 1; i < n; ++i)
                    g = g * elem_E(nn, i, rng.positive_rational());

                auto a_vals = word_cluster_values(w, g);
                auto tw = word_cluster_values(w, twist(g, cword));
                if (!all_nonzero(a_vals) || !all_nonzero(tw))
                    throw GenericityError(0);
                // mutated variables along mu_1, ..., mu_r
                Seed s = s0;
                auto a_prime = a_vals;
                for (int k = 1; k <= c.rank; ++k) {
                    a_prime = mutate_A(s, a_prime, k);
                    s = mutate_B(s, k);
                }
                bool pass = true;
                std::string what;
                for (size_t i = 0; i < labels.size() && pass; ++i) {
                    if (a_prime.at(labels[i]) != monomial_row(M, i, labels, tw)) {
                        pass = false;
                        what = "trial " + std::to_string(t) + ": identity fails at label " +
                               std::to_string(labels[i]);
                    }
                }
                tally(rep, pass, what);
                done = true;
            } catch (const Error&) {
                ++rep.genericity_retries;
            }
        }
        if (!done) tally(rep, false, "trial " + std::to_string(t) + ": retries exhausted");
    }
    return rep;
}

Report verify_ensemble(int n, long trials, unsigned long long seed) {
    if (n < 2) throw Error("verify_ensemble: n must be >= 2");
    Report rep;
    rep.name = "ensemble(n=" + std::to_string(n) + ")";
    rep.rng_seed = static_cast<long long>(seed);
    Sampler rng(seed);
    auto c = catalog("A" + std::to_string(n - 1));
    auto w = coxeter_double_word(c);
    Seed s = build_word_seed(w);
    QMatrix bmod = build_B_mod(w, s);
    QMatrix N = twist_matrix_N(c);
    std::vector<int> labels = w.index_labels();
    std::vector<int> cword = coxeter_word(c);
    // the opposite double word (1..r, -1..-r), whose variables the N matrix
    // expresses through the X-coordinates of the chart
    std::vector<int> opp;
    for (int i = 1; i <= c.rank; ++i) opp.push_back(i);
    for (int i = 1; i <= c.rank; ++i) opp.push_back(-i);
    DoubleReducedWord wp{c, opp};
    auto fund = [&](int lab) { return static_cast<long>(w.abs_letter(lab)); };

    auto run_point = [&](const std::map<int, Rational>& x, const std::string& what) {
        Matrix<Rational> g = evaluate_x_chart(w, x);
        Rational det = g.det();
        auto tw = word_cluster_values(w, twist(g, cword));
        auto avals = word_cluster_values(wp, g);
        if (!all_nonzero(tw) || !all_nonzero(avals) || det.is_zero())
            throw GenericityError(0);
        for (size_t i = 0; i < labels.size(); ++i) {
            long wi = 0;
            for (size_t j = 0; j < labels.size(); ++j)
                wi += fund(labels[j]) * bmod.at(i, j).to_long();
            Rational lhs = monomial_row(bmod, i, labels, tw).pow(n);
            if (lhs != x.at(labels[i]).pow(n) * det.pow(wi)) {
                tally(rep, false, what + ": chart identity fails at label " +
                                      std::to_string(labels[i]));
                return;
            }
            Rational rhs = det.pow(2 * fund(labels[i])) *
                           monomial_row(N, i, labels, x, 2L * n);
            if (avals.at(labels[i]).pow(2L * n) != rhs) {
                tally(rep, false, what + ": N identity fails at label " +
                                      std::to_string(labels[i]));
                return;
            }
        }
        tally(rep, true, "");
    };

    // the trivial point X = 1, where defined
    try {
        std::map<int, Rational> ones;
        for (int lab : labels) ones[lab] = Rational(1);
        run_point(ones, "trivial point");
    } catch (const Error&) {
        ++rep.genericity_retries;
    }

    for (long t = 0; t < trials; ++t) {
        bool done = false;
        for (int attempt = 0; attempt < 100 && !done; ++attempt) {
            try {
                std::map<int, Rational> x;
                for (int lab : labels) x[lab] = rng.positive_rational();
                run_point(x, "trial " + std::to_string(t));
                done = true;
            } catch (const Error&) {
                ++rep.genericity_retries;
            }
        }
        if (!done) tally(rep, false, "trial " + std::to_string(t) + ": retries exhausted");
    }
    return rep;
}

Report verify_factorization_conservation(int n, long steps, long points,
                                         unsigned long long seed) {
    if (n < 2) throw Error("verify_factorization_conservation: n must be >= 2");
    Report rep;
    rep.name = "factorization-conservation(n=" + std::to_string(n) + ")";
    rep.rng_seed = static_cast<long long>(seed);
    Sampler rng(seed);
    auto c = catalog("A" + std::to_string(n - 1));
    SigmaC sc = build_sigma_c(c);
    for (long p = 0; p < points; ++p) {
        tally_run(rep, "orbit " + std::to_string(p), [&] {
            std::map<int, Rational> x;
            for (int i = 1; i <= 2 * c.rank; ++i) x[i] = rng.positive_rational();
            auto inv0 = invariant_ratios(sigma_c_group_element(c, x));
            for (long k = 0; k < steps; ++k) {
                x = factorization_step(sc, x);
                if (invariant_ratios(sigma_c_group_element(c, x)) != inv0) return false;
            }
            return true;
        });
    }
    // the same conservation through the Q-system pipeline in type A
    auto spec = make_qsystem(c.tag);
    long qpoints = points >= 5 ? points / 5 : 1;
    for (long p = 0; p < qpoints; ++p) {
        tally_run(rep, "q-orbit " + std::to_string(p), [&] {
            QState st;
            for (int a = 1; a <= c.rank; ++a) {
                st.lower[a] = rng.positive_rational();
                st.upper[a] = rng.positive_rational();
            }
            auto inv0 = q_conserved(spec, st);
            for (int k = 0; k < 10; ++k) {
                st = q_step(spec, st, QDirection::forward, true);
                if (q_conserved(spec, st) != inv0) return false;
            }
            return true;
        });
    }
    return rep;
}

Report verify_laurent(long sequences, int max_len, int max_rank,
                      unsigned long long seed) {
    Report rep;
    rep.name = "laurent";
    rep.rng_seed = static_cast<long long>(seed);
    Sampler rng(seed);
    std::vector<Seed> pool;
    for (const auto& tag : finite_tags(max_rank)) {
        auto c = catalog(tag);
        pool.push_back(build_sigma_c(c).seed);
        pool.push_back(build_word_seed(coxeter_double_word(c)));
    }
    // Exchange-matrix entries and cluster-variable supports both grow
    // doubly-exponentially along adversarial mutation sequences (already at
    // rank 2 the glued seeds contain weight-2 arrows in cycles), so uniform
    // sampling would occasionally demand polynomials with billions of terms.
    // A sampled index whose estimated cost (log2 of the product of the factor
    // supports, exponent-weighted) exceeds the budget is redrawn and counted
    // as a resample; a sequence ends early once every index is over budget,
    // with all variables computed up to that point checked.
    const double log2_term_budget = 16.0;
    for (long t = 0; t < sequences; ++t) {
        tally_run(rep, "sequence " + std::to_string(t), [&] {
            const Seed& base = pool[static_cast<size_t>(
                rng.integer(0, static_cast<long>(pool.size()) - 1))];
            std::vector<int> unfrozen = base.unfrozen();
            long len = rng.integer(1, max_len);
            Seed s = base;
            auto p = initial_point(base, Flavor::A);
            auto cost = [&](int k) {
                double bits = 0;
                for (int j : s.indices) {
                    long e = std::abs(s.b(j, k).to_long());
                    if (e == 0) continue;
                    const auto& v = p.entries.at(j);
                    bits += static_cast<double>(e) *
                            std::log2(1.0 + static_cast<double>(
                                                v.num().terms().size() +
                                                v.den().terms().size()));
                }
                return bits;
            };
            for (long k = 0; k < len; ++k) {
                int at = 0;
                bool found = false;
                for (size_t attempt = 0; attempt < 2 * unfrozen.size(); ++attempt) {
                    int cand = unfrozen[static_cast<size_t>(
                        rng.integer(0, static_cast<long>(unfrozen.size()) - 1))];
                    if (cost(cand) <= log2_term_budget) {
                        at = cand;
                        found = true;
                        break;
                    }
                    ++rep.genericity_retries;
                }
                if (!found) break;
                p = mutate_A(s, p, at);
                s = mutate_B(s, at);
                for (const auto& [lab, v] : p.entries)
                    if (!v.as_laurent().has_value()) return false;
            }
            return true;
        });
    }
    return rep;
}

}  // namespace clusterdyn
