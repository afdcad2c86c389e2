#pragma once

#include <random>
#include <string>

#include "qsystem.hpp"

namespace clusterdyn {

// Outcome of a verification driver. A driver runs a fixed set of checks
// ("trials"); failures record a description of the first one and keep
// counting. Genericity retries (resampled degenerate points) are reported
// but are not failures. Reports with the same inputs and seed are
// byte-identical when serialized.
struct Report {
    std::string name;
    long trials = 0;
    long passes = 0;
    long genericity_retries = 0;
    std::string first_failure;      // empty when everything passed
    long long rng_seed = -1;        // -1 for deterministic (exhaustive) drivers

    bool ok() const { return trials == passes && first_failure.empty(); }
    json to_json() const;
    std::string summary() const;    // single pass/fail line
};

// Deterministic positive-rational sampler: numerator and denominator drawn
// uniformly from [1, 100].
class Sampler {
public:
    explicit Sampler(unsigned long long seed) : eng_(seed) {}
    Rational positive_rational() {
        std::uniform_int_distribution<long> d(1, 100);
        return Rational(d(eng_), d(eng_));
    }
    long integer(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(eng_);
    }

private:
    std::mt19937_64 eng_;
};

// The distinguished mutation sequence of the glued seed is a sigma-period,
// for every finite type of rank <= max_finite_rank and every untwisted
// affine type of rank <= max_affine_rank.
Report verify_sigma_period(int max_finite_rank, int max_affine_rank);

// Gluing the Coxeter word seed yields the glued 2r-index seed, and gluing
// commutes with mutation along the full prefix chain mu_1, ..., mu_r.
Report verify_amalgamation(int max_rank);

// The Coxeter word seed's exchange matrix equals its block form.
Report verify_bmatrix_blocks(int max_rank);

// The Coxeter element identities on fundamental weights, finite and affine.
Report verify_coxeter_identity(int max_finite_rank, int max_affine_rank);

// Q-system vs cluster dynamics: symbolic to symbolic_depth for the named
// small types, numeric to numeric_depth at `points` random positive states
// for every finite type of rank <= max_rank.
Report verify_q_vs_cluster(int symbolic_depth, int numeric_depth, int max_rank,
                           int points, unsigned long long seed);

// Twist relation A'_i = prod_j (tau^* A_j)^{M_ij} at `trials` random det-1
// elements of the Coxeter cell in SL_n.
Report verify_twist(int n, long trials, unsigned long long seed);

// Chart/twist monomial identities at `trials` random chart points in SL_n:
// (prod_j tau^*A_j^{Bmod_ij})^n = X_i^n det^{w_i}, and the half-integer
// N-matrix relation on the opposite double word with 2n-th powers.
Report verify_ensemble(int n, long trials, unsigned long long seed);

// Invariant ratios conserved along >= `steps` factorization iterations at
// `points` random positive X-points, plus the Q-system pipeline agreement
// in type A.
Report verify_factorization_conservation(int n, long steps, long points,
                                         unsigned long long seed);

// Every mutated cluster variable along `sequences` random mutation sequences
// of length <= max_len is Laurent in the initial cluster, on glued seeds and
// word seeds of rank <= max_rank.
Report verify_laurent(long sequences, int max_len, int max_rank,
                      unsigned long long seed);

}  // namespace clusterdyn
