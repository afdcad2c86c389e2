#pragma once

#include "amalgamation.hpp"
#include "weyl.hpp"

namespace clusterdyn {

// A double reduced word: entries i_1..i_m with i_l in {±1..±rank}, whose
// negative letters (by absolute value, in position order) form a reduced word
// for u and whose positive letters form a reduced word for v. Seed index
// labels are {-1..-rank} ∪ {1..m}; the boundary convention i_k = k for k < 1
// extends letters to the negative labels.
struct DoubleReducedWord {
    CartanData cartan;
    std::vector<int> entries;

    int m() const { return static_cast<int>(entries.size()); }

    int letter(int label) const {
        if (label < 1) return label;
        if (label > m()) throw Error("DoubleReducedWord: label beyond the word");
        return entries[label - 1];
    }
    int abs_letter(int label) const { return std::abs(letter(label)); }
    int eps(int label) const { return letter(label) < 0 ? -1 : 1; }

    // Smallest label l in (k, m] with |i_l| = |i_k|, else m+1.
    int kplus(int label) const;

    // Seed index labels in storage order: -1,-2,...,-rank, 1,...,m.
    std::vector<int> index_labels() const;

    std::vector<int> negative_subword() const;  // reduced word for u
    std::vector<int> positive_subword() const;  // reduced word for v

    // Checks letter ranges and that both subwords are reduced.
    void validate() const;
};

// The double word (-1,-2,...,-r, 1,2,...,r) for u = v = the Coxeter element.
DoubleReducedWord coxeter_double_word(const CartanData& c);

// Seed attached to a double reduced word: labels as above, label k frozen iff
// k < 0 or k+ > m, d_k = d'_{|i_k|}, and exchange entries
//   B_jk = (C_{|i_k|,|i_j|}/2) * ( eps_j [j = k+] - eps_k [j+ = k]
//          + eps_j [k < j < k+, j > 0]   - eps_{j+} [k < j+ < k+, j+ <= m]
//          - eps_k [j < k < j+, k > 0]   + eps_{k+} [j < k+ < j+, k+ <= m] ).
Seed build_word_seed(const DoubleReducedWord& w);

// The 3r x 3r matrix the word seed of the Coxeter double word must equal,
// assembled from upper/lower unitriangular pieces of C^t:
//   [ Cu^t - C^t/2   Cl^t          0          ]
//   [ -Cu^t          0             -Cl^t      ]
//   [ 0              Cu^t          Cl^t - C^t/2 ]
// with (Cu^t)_ij = delta_ij + [i<j] C_ji and (Cl^t)_ij = delta_ij + [i>j] C_ji,
// blocks ordered (-1..-r | 1..r | r+1..2r).
QMatrix lemma_block_matrix(const CartanData& c);

// B^mod = B + M_mod with M_mod_jk = (1/2) C_{|i_k|,|i_j|} ([j+ > m][k+ > m] +
// [j < 0][k < 0]); the result is integral. Rows/columns in seed index order.
QMatrix build_B_mod(const DoubleReducedWord& w, const Seed& s);

// The rank-2r coefficient-free seed Sigma_C: indices 1..2r all unfrozen,
// B[a][j+r] = C_ja (so B = [[0, C^t], [-C^t, 0]] in block form), d = (d', d').
// Its distinguished mutation sequence is mu_1..mu_r with relabeling
// sigma = (i <-> i+r).
struct SigmaC {
    Seed seed;
    std::vector<int> mutation_sequence;
    IndexPermutation sigma;
};
SigmaC build_sigma_c(const CartanData& c);

// Gluing map from the Coxeter word seed onto Sigma_C: -j and j+r glue to
// target j, and the unfrozen j (j <= r) maps to target j+r. No target index
// is frozen.
AmalgamationMap coxeter_amalgamation(const CartanData& c);

// Twist matrices for the Coxeter double word, rows/columns in seed index
// order (-1..-r, 1..2r); a = |i_j|, b = |i_k| below, c the Coxeter element.
//   N_jk = <c w_a | w_b^v>      for j > r, k < 0,
//          <c^{-1} w_a | w_b^v> for j < 0, k > r,
//          <w_a | w_b^v>        otherwise;
//   M_jk = delta_jk                for 1 <= j,k <= r,
//          <c w_a | alpha_b^v>     for j > r, k < 0,
//          <c^{-1} w_a | alpha_b^v> for j < 0, k > r,
//          0 otherwise.
// The identity M = N * B^mod is a checked theorem, not enforced here.
QMatrix twist_matrix_N(const CartanData& c);
QMatrix twist_matrix_M(const CartanData& c);

// Mutation of the twist matrix at unfrozen label k: only row k changes,
//   M'_kj = 2 delta_kj - M_kj + sum_l ( [B_kl M_lj]_-  -  [B_kl]_- M_lj ),
// where [x]_- = min(x, 0). B is the seed's exchange matrix in the same order.
QMatrix m_prime(const Seed& s, const QMatrix& M, const QMatrix& B, int k_label);

// Data of the generalized minor attached to a label: the fundamental index
// and reduced words for the flag pair. For k >= 1, uword collects the
// negative letters of positions 1..k and vword the positive letters of
// positions m down to k+1 (leftmost letter from position m); labels k < 0
// take uword = e and vword the full reversed positive word.
struct MinorSpec {
    int fund;
    std::vector<int> uword;
    std::vector<int> vword;
};
MinorSpec minor_spec(const DoubleReducedWord& w, int label);

}  // namespace clusterdyn
