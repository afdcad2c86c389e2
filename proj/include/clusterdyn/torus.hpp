#pragma once

#include <map>

#include "ratfunc.hpp"
#include "seed.hpp"

namespace clusterdyn {

enum class Flavor { A, X };

// A point of the torus attached to a seed, with coordinates expressed as
// rational functions of a fixed initial alphabet. Numeric points are plain
// maps from index label to Rational; the mutation rules below are shared.
struct SymbolicTorusPoint {
    Flavor flavor = Flavor::A;
    std::map<int, RationalFunction> entries;

    bool operator==(const SymbolicTorusPoint& o) const {
        return flavor == o.flavor && entries == o.entries;
    }
};

// Variable name for an index label: "A1", "Am2" (m = minus), etc.
inline std::string coord_name(Flavor flavor, int label) {
    std::string name(flavor == Flavor::A ? "A" : "X");
    if (label < 0) {
        name += "m" + std::to_string(-label);
    } else {
        name += std::to_string(label);
    }
    return name;
}

// The identity point: coordinate i is the variable named after i.
inline SymbolicTorusPoint initial_point(const Seed& s, Flavor flavor) {
    std::vector<std::string> vars;
    for (int i : s.indices) vars.push_back(coord_name(flavor, i));
    SymbolicTorusPoint p;
    p.flavor = flavor;
    for (size_t i = 0; i < s.indices.size(); ++i)
        p.entries[s.indices[i]] = RationalFunction::variable(vars, i);
    return p;
}

namespace detail {

inline long exponent_of(const Rational& b, const char* where) {
    if (!b.is_integer()) throw Error(std::string(where) + ": non-integer exchange entry");
    return b.to_long();
}

// eq:Atrans. A'_k = A_k^{-1}( prod_{B_kj>0} A_j^{B_kj} + prod_{B_kj<0} A_j^{-B_kj} ).
template <class V>
std::map<int, V> mutate_A_values(const Seed& s, const std::map<int, V>& a, int k) {
    if (!s.has_index(k)) throw Error("mutate_A: unknown index " + std::to_string(k));
    if (s.is_frozen(k)) throw Error("mutate_A: frozen index " + std::to_string(k));
    const V& sample = a.begin()->second;
    V pos = one_like(sample), neg = one_like(sample);
    size_t kp = s.pos(k);
    for (size_t j = 0; j < s.size(); ++j) {
        long e = exponent_of(s.B[kp][j], "mutate_A");
        if (e > 0) pos *= a.at(s.indices[j]).pow(e);
        if (e < 0) neg *= a.at(s.indices[j]).pow(-e);
    }
    std::map<int, V> r = a;
    r[k] = (pos + neg) * a.at(k).pow(-1);
    return r;
}

// eq:Xtrans. X'_k = X_k^{-1}; X'_i = X_i X_k^{[B_ik]_+} (1+X_k)^{-B_ik}.
template <class V>
std::map<int, V> mutate_X_values(const Seed& s, const std::map<int, V>& x, int k) {
    if (!s.has_index(k)) throw Error("mutate_X: unknown index " + std::to_string(k));
    if (s.is_frozen(k)) throw Error("mutate_X: frozen index " + std::to_string(k));
    size_t kp = s.pos(k);
    const V& xk = x.at(k);
    V one = one_like(xk);
    V xk1 = one + xk;
    std::map<int, V> r;
    for (size_t i = 0; i < s.size(); ++i) {
        int label = s.indices[i];
        if (label == k) {
            r[label] = xk.pow(-1);
            continue;
        }
        long e = exponent_of(s.B[i][kp], "mutate_X");
        V v = x.at(label);
        if (e > 0) v *= xk.pow(e);
        if (e != 0) v *= xk1.pow(-e);
        r[label] = v;
    }
    return r;
}

// p-map: X_i = prod_j A_j^{B_ij}.
template <class V>
std::map<int, V> p_map_values(const Seed& s, const std::map<int, V>& a) {
    std::map<int, V> x;
    const V& sample = a.begin()->second;
    for (size_t i = 0; i < s.size(); ++i) {
        V v = one_like(sample);
        for (size_t j = 0; j < s.size(); ++j) {
            if (s.B[i][j].is_zero()) continue;
            if (!s.B[i][j].is_integer())
                throw Error("p_map: non-integer exponent in row " +
                            std::to_string(s.indices[i]));
            v *= a.at(s.indices[j]).pow(s.B[i][j].to_long());
        }
        x[s.indices[i]] = v;
    }
    return x;
}

}  // namespace detail

using IndexPermutation = std::map<int, int>;

inline int apply_perm(const IndexPermutation& sigma, int i) {
    auto it = sigma.find(i);
    return it == sigma.end() ? i : it->second;
}

inline IndexPermutation invert_perm(const IndexPermutation& sigma) {
    IndexPermutation inv;
    for (const auto& [a, b] : sigma) inv[b] = a;
    return inv;
}

inline SymbolicTorusPoint mutate_A(const Seed& s, const SymbolicTorusPoint& p, int k) {
    if (p.flavor != Flavor::A) throw Error("mutate_A: point is not A-flavored");
    return {Flavor::A, detail::mutate_A_values(s, p.entries, k)};
}

inline SymbolicTorusPoint mutate_X(const Seed& s, const SymbolicTorusPoint& p, int k) {
    if (p.flavor != Flavor::X) throw Error("mutate_X: point is not X-flavored");
    return {Flavor::X, detail::mutate_X_values(s, p.entries, k)};
}

inline SymbolicTorusPoint mutate_point(const Seed& s, const SymbolicTorusPoint& p, int k) {
    return p.flavor == Flavor::A ? mutate_A(s, p, k) : mutate_X(s, p, k);
}

inline SymbolicTorusPoint p_map(const Seed& s, const SymbolicTorusPoint& p) {
    if (p.flavor != Flavor::A) throw Error("p_map: point is not A-flavored");
    return {Flavor::X, detail::p_map_values(s, p.entries)};
}

// Numeric variants on assignments keyed by index label.
inline std::map<int, Rational> mutate_A(const Seed& s, const std::map<int, Rational>& a,
                                        int k) {
    return detail::mutate_A_values(s, a, k);
}
inline std::map<int, Rational> mutate_X(const Seed& s, const std::map<int, Rational>& x,
                                        int k) {
    return detail::mutate_X_values(s, x, k);
}
inline std::map<int, Rational> p_map(const Seed& s, const std::map<int, Rational>& a) {
    return detail::p_map_values(s, a);
}

// Log-canonical bracket coefficients: P_ij = B_ij d_j.
inline std::vector<std::vector<Rational>> poisson_matrix(const Seed& s) {
    std::vector<std::vector<Rational>> p(s.size(), std::vector<Rational>(s.size()));
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = 0; j < s.size(); ++j) p[i][j] = s.B[i][j] * Rational(s.d[j]);
    return p;
}

// True iff mutating B along seq (left-to-right) equals the sigma-relabeled
// original: mu(B)_ij = B_{sigma(i) sigma(j)}.
inline bool check_sigma_period(const Seed& s, const std::vector<int>& seq,
                               const IndexPermutation& sigma) {
    Seed m = mutate_B(s, seq);
    for (int i : s.indices) {
        if (s.is_frozen(i) != s.is_frozen(apply_perm(sigma, i))) return false;
        for (int j : s.indices)
            if (m.b(i, j) != s.b(apply_perm(sigma, i), apply_perm(sigma, j))) return false;
    }
    return true;
}

// Cluster automorphism induced by a sigma-period: pullback coordinates
// mu_sigma^*(Z_i) = mu^*(Z_{sigma^{-1}(i)}), either flavor. Values version.
template <class V>
std::map<int, V> cluster_automorphism_values(const Seed& s, const std::vector<int>& seq,
                                             const IndexPermutation& sigma,
                                             const std::map<int, V>& point, Flavor flavor,
                                             bool check_period = true) {
    if (check_period && !check_sigma_period(s, seq, sigma))
        throw Error("cluster_automorphism: sequence is not a sigma-period");
    Seed cur = s;
    std::map<int, V> vals = point;
    for (int k : seq) {
        vals = flavor == Flavor::A ? detail::mutate_A_values(cur, vals, k)
                                   : detail::mutate_X_values(cur, vals, k);
        cur = mutate_B(cur, k);
    }
    IndexPermutation inv = invert_perm(sigma);
    std::map<int, V> out;
    for (int i : s.indices) out[i] = vals.at(apply_perm(inv, i));
    return out;
}

inline SymbolicTorusPoint cluster_automorphism(const Seed& s, const std::vector<int>& seq,
                                               const IndexPermutation& sigma,
                                               const SymbolicTorusPoint& p,
                                               bool check_period = true) {
    return {p.flavor,
            cluster_automorphism_values(s, seq, sigma, p.entries, p.flavor, check_period)};
}

}  // namespace clusterdyn
