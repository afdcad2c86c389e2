#pragma once

#include <algorithm>

#include "cartan.hpp"

namespace clusterdyn {

// Weights are stored by their coordinates in the fundamental-weight basis,
// coweights by their coordinates in the fundamental-coweight basis; both are
// length-rank vectors. Words are 1-based simple-reflection indices and act by
// the rightmost letter first, so weyl_act(c, {1,2,...,r}, a) computes the
// Coxeter element s_1 s_2 ... s_r applied to a.

using WeightVector = std::vector<Rational>;

inline void apply_reflection_weight(const CartanData& c, int i, WeightVector& a) {
    if (i < 1 || i > c.rank) throw Error("weyl: reflection index out of range");
    Rational ai = a[i - 1];
    if (ai.is_zero()) return;
    for (int j = 0; j < c.rank; ++j) a[j] -= ai * Rational(c.C[j][i - 1]);
}

inline void apply_reflection_coweight(const CartanData& c, int i, WeightVector& b) {
    if (i < 1 || i > c.rank) throw Error("weyl: reflection index out of range");
    Rational bi = b[i - 1];
    if (bi.is_zero()) return;
    for (int j = 0; j < c.rank; ++j) b[j] -= bi * Rational(c.C[i - 1][j]);
}

inline WeightVector weyl_act(const CartanData& c, const std::vector<int>& word,
                             WeightVector a, bool coweight = false) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (coweight)
            apply_reflection_coweight(c, *it, a);
        else
            apply_reflection_weight(c, *it, a);
    }
    return a;
}

inline WeightVector fundamental_weight(const CartanData& c, int i) {
    if (i < 1 || i > c.rank) throw Error("weyl: weight index out of range");
    WeightVector a(c.rank, Rational(0));
    a[i - 1] = Rational(1);
    return a;
}

inline std::vector<int> coxeter_word(const CartanData& c) {
    std::vector<int> w(c.rank);
    for (int i = 0; i < c.rank; ++i) w[i] = i + 1;
    return w;
}

inline std::vector<int> inverse_word(std::vector<int> w) {
    std::reverse(w.begin(), w.end());
    return w;
}

// <lambda | alpha_k^v> for lambda in fundamental-weight coordinates.
inline Rational pair_with_simple_coroot(const WeightVector& a, int k) {
    return a[k - 1];
}

// <lambda | omega_k^v> = sum_i a_i (C^{-1})_{ki}; finite type only.
inline Rational pair_with_fundamental_coweight(const CartanData& c, const WeightVector& a,
                                               int k) {
    if (c.affine) throw Error("weyl: coweight pairing needs an invertible Cartan matrix");
    QMatrix m(c.rank, c.rank, Rational(0));
    for (int i = 0; i < c.rank; ++i)
        for (int j = 0; j < c.rank; ++j) m.at(i, j) = Rational(c.C[i][j]);
    QMatrix inv = m.inverse();
    Rational s(0);
    for (int i = 0; i < c.rank; ++i) s += a[i] * inv.at(k - 1, i);
    return s;
}

// A word is reduced iff each prefix lengthens: l(w s_i) > l(w) <=> w(alpha_i) > 0.
// w(alpha_i) is tracked in simple-root coordinates, where s_t subtracts
// (sum_j C_tj m_j) from m_t; positivity means nonzero with all coordinates >= 0.
inline bool is_reduced(const CartanData& c, const std::vector<int>& word) {
    for (size_t t = 0; t < word.size(); ++t) {
        if (word[t] < 1 || word[t] > c.rank) throw Error("weyl: word letter out of range");
        std::vector<Rational> m(c.rank, Rational(0));
        m[word[t] - 1] = Rational(1);
        for (size_t s = t; s-- > 0;) {
            int i = word[s] - 1;
            Rational coef(0);
            for (int j = 0; j < c.rank; ++j) coef += Rational(c.C[i][j]) * m[j];
            m[i] -= coef;
        }
        bool nonneg = true, nonzero = false;
        for (const auto& x : m) {
            if (x.is_negative()) nonneg = false;
            if (!x.is_zero()) nonzero = true;
        }
        if (!(nonneg && nonzero)) return false;
    }
    return true;
}

// The Coxeter-element identities used by the exchange-matrix block lemma,
// verified in simple-root coordinates so they apply verbatim in affine type:
// writing c omega_i - omega_i = sum_j m_j alpha_j,
//   (1)  m_k + sum_{j>k} C_kj m_j = -delta_ik   for all i,k, and
//   (2)  m'_k + sum_{j<k} C_kj m'_j = -delta_ik  with m' from c^{-1} omega_i.
// Returns true if both hold for every i; throws with a witness otherwise.
inline bool check_coxeter_identity(const CartanData& c) {
    int r = c.rank;
    for (int i = 1; i <= r; ++i) {
        // m tracks lambda - omega_i in root coordinates while lambda starts at
        // omega_i and the reflections of c = s_1...s_r are applied (s_r first).
        std::vector<Rational> m(r, Rational(0));
        for (int t = r; t >= 1; --t) {
            Rational coef(t == i ? 1 : 0);
            for (int j = 0; j < r; ++j) coef += Rational(c.C[t - 1][j]) * m[j];
            m[t - 1] -= coef;
        }
        for (int k = 1; k <= r; ++k) {
            Rational lhs = m[k - 1];
            for (int j = k + 1; j <= r; ++j) lhs += Rational(c.C[k - 1][j - 1]) * m[j - 1];
            if (lhs != Rational(k == i ? -1 : 0))
                throw Error("coxeter identity (1) fails for " + c.tag + " at i=" +
                            std::to_string(i) + ", k=" + std::to_string(k));
        }
        std::vector<Rational> mp(r, Rational(0));
        for (int t = 1; t <= r; ++t) {
            Rational coef(t == i ? 1 : 0);
            for (int j = 0; j < r; ++j) coef += Rational(c.C[t - 1][j]) * mp[j];
            mp[t - 1] -= coef;
        }
        for (int k = 1; k <= r; ++k) {
            Rational lhs = mp[k - 1];
            for (int j = 1; j < k; ++j) lhs += Rational(c.C[k - 1][j - 1]) * mp[j - 1];
            if (lhs != Rational(k == i ? -1 : 0))
                throw Error("coxeter identity (2) fails for " + c.tag + " at i=" +
                            std::to_string(i) + ", k=" + std::to_string(k));
        }
    }
    return true;
}

}  // namespace clusterdyn
