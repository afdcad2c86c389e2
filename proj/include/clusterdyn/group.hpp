#pragma once

#include <map>
#include <string>
#include <vector>

#include "ratfunc.hpp"
#include "wordseed.hpp"

namespace clusterdyn {

// Exact matrix realization of SL_n / GL_n (projective comparisons for PGL_n).
// Elements are plain Matrix<F> values with F = Rational or RationalFunction;
// coweight powers t^{w_i^v} are lifted to GL_n as diag(t,...,t,1,...,1) with t
// in the first i slots, so chart images are well-defined up to a scalar.

// Thrown when a Gauss (LDU) decomposition hits a vanishing leading principal
// minor; carries the 1-based index of the offending minor.
struct GenericityError : Error {
    int minor_index;
    explicit GenericityError(int k)
        : Error("ldu: leading principal minor " + std::to_string(k) + " vanishes"),
          minor_index(k) {}
};

namespace detail {
inline void check_node(size_t n, int i, const char* what) {
    if (i < 1 || static_cast<size_t>(i) + 1 > n)
        throw Error(std::string(what) + ": node index " + std::to_string(i) +
                    " out of range for n = " + std::to_string(n));
}
}  // namespace detail

// E_i(t) = Id + t * (unit at row i, column i+1); one-parameter upper subgroup.
template <class F>
Matrix<F> elem_E(size_t n, int i, const F& t) {
    detail::check_node(n, i, "elem_E");
    Matrix<F> m = Matrix<F>::identity(n, one_like(t));
    m.at(i - 1, i) = t;
    return m;
}

// F_i(t) = Id + t * (unit at row i+1, column i); one-parameter lower subgroup.
template <class F>
Matrix<F> elem_F(size_t n, int i, const F& t) {
    detail::check_node(n, i, "elem_F");
    Matrix<F> m = Matrix<F>::identity(n, one_like(t));
    m.at(i, i - 1) = t;
    return m;
}

// GL_n lift of t^{w_i^v}: diag(t,...,t,1,...,1) with t in the first i slots.
template <class F>
Matrix<F> coweight_power(size_t n, int i, const F& t) {
    detail::check_node(n, i, "coweight_power");
    if (t.is_zero()) throw Error("coweight_power: zero value");
    Matrix<F> m = Matrix<F>::identity(n, one_like(t));
    for (int k = 0; k < i; ++k) m.at(k, k) = t;
    return m;
}

// Reflection representatives: sbar_i = E_i(-1) F_i(1) E_i(-1) is the 2x2 block
// [[0,-1],[1,0]] at rows/columns (i, i+1); sdoublebar_i is its inverse.
template <class F>
Matrix<F> sbar(size_t n, int i, const F& one) {
    detail::check_node(n, i, "sbar");
    Matrix<F> m = Matrix<F>::identity(n, one);
    m.at(i - 1, i - 1) = zero_like(one);
    m.at(i, i) = zero_like(one);
    m.at(i - 1, i) = zero_like(one) - one;
    m.at(i, i - 1) = one;
    return m;
}

template <class F>
Matrix<F> sdoublebar(size_t n, int i, const F& one) {
    detail::check_node(n, i, "sdoublebar");
    Matrix<F> m = Matrix<F>::identity(n, one);
    m.at(i - 1, i - 1) = zero_like(one);
    m.at(i, i) = zero_like(one);
    m.at(i - 1, i) = one;
    m.at(i, i - 1) = zero_like(one) - one;
    return m;
}

// Ordered representative of a reduced word: wbar = sbar_{i_1} ... sbar_{i_k}.
template <class F>
Matrix<F> word_rep_bar(size_t n, const std::vector<int>& word, const F& one) {
    Matrix<F> m = Matrix<F>::identity(n, one);
    for (int i : word) m = m * sbar(n, i, one);
    return m;
}

template <class F>
Matrix<F> word_rep_doublebar(size_t n, const std::vector<int>& word, const F& one) {
    Matrix<F> m = Matrix<F>::identity(n, one);
    for (int i : word) m = m * sdoublebar(n, i, one);
    return m;
}

// Exact inverse of word_rep_bar: sbar_i^{-1} = sdoublebar_i, reversed order.
template <class F>
Matrix<F> word_rep_bar_inverse(size_t n, const std::vector<int>& word, const F& one) {
    Matrix<F> m = Matrix<F>::identity(n, one);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        m = m * sdoublebar(n, *it, one);
    return m;
}

// d0 = diag(1,-1,1,-1,...), its own inverse; conjugation by d0 turns the
// transpose-inverse into the automorphism theta and the plain inverse into
// the antiautomorphism iota on the generators (checked by the oracle tests).
template <class F>
Matrix<F> alternating_diag(size_t n, const F& one) {
    Matrix<F> m = Matrix<F>::identity(n, one);
    for (size_t k = 1; k < n; k += 2) m.at(k, k) = zero_like(one) - one;
    return m;
}

// Antiautomorphism iota: E_i(t) -> E_i(t), F_i(t) -> F_i(t), a -> a^{-1}.
template <class F>
Matrix<F> iota(const Matrix<F>& g) {
    Matrix<F> d0 = alternating_diag(g.rows(), one_like(g.at(0, 0)));
    return d0 * g.inverse() * d0;
}

// Automorphism theta: E_i(t) -> F_i(t), F_i(t) -> E_i(t), a -> a^{-1}.
template <class F>
Matrix<F> theta(const Matrix<F>& g) {
    Matrix<F> d0 = alternating_diag(g.rows(), one_like(g.at(0, 0)));
    return d0 * g.transpose().inverse() * d0;
}

// Gauss factorization g = lower * diag * upper with unitriangular lower/upper.
template <class F>
struct LDUParts {
    Matrix<F> lower, diag, upper;
};

template <class F>
LDUParts<F> ldu(const Matrix<F>& g) {
    if (g.rows() != g.cols()) throw Error("ldu: non-square matrix");
    size_t n = g.rows();
    F one = one_like(g.at(0, 0));
    F zero = zero_like(one);
    Matrix<F> lo = Matrix<F>::identity(n, one);
    Matrix<F> di(n, n, zero);
    Matrix<F> up = Matrix<F>::identity(n, one);
    Matrix<F> w = g;
    for (size_t k = 0; k < n; ++k) {
        const F& piv = w.at(k, k);
        if (piv.is_zero()) throw GenericityError(static_cast<int>(k) + 1);
        di.at(k, k) = piv;
        for (size_t i = k + 1; i < n; ++i) lo.at(i, k) = w.at(i, k) / piv;
        for (size_t j = k + 1; j < n; ++j) up.at(k, j) = w.at(k, j) / piv;
        for (size_t i = k + 1; i < n; ++i) {
            if (w.at(i, k).is_zero()) continue;
            for (size_t j = k + 1; j < n; ++j)
                w.at(i, j) -= lo.at(i, k) * w.at(k, j);
        }
    }
    return {lo, di, up};
}

// Twist map with u = v = c (a word in simple reflections):
//   tau(g) = ( [udd g^iota]_-^{-1} * udd g^iota vb * [g^iota vb]_+^{-1} )^theta
// where udd is the doublebar representative of u and vb the bar one of v.
template <class F>
Matrix<F> twist(const Matrix<F>& g, const std::vector<int>& cword) {
    F one = one_like(g.at(0, 0));
    size_t n = g.rows();
    Matrix<F> gi = iota(g);
    Matrix<F> udd = word_rep_doublebar(n, cword, one);
    Matrix<F> vb = word_rep_bar(n, cword, one);
    Matrix<F> left = ldu(udd * gi).lower;
    Matrix<F> right = ldu(gi * vb).upper;
    return theta(left.inverse() * udd * gi * vb * right.inverse());
}

// Generalized minor D^{w_i}_{u,v}(g) = leading principal i x i minor of
// ubar^{-1} g vbar, with the bar representatives above.
template <class F>
F generalized_minor(const Matrix<F>& g, int fund, const std::vector<int>& uword,
                    const std::vector<int>& vword) {
    if (fund < 1 || static_cast<size_t>(fund) > g.rows())
        throw Error("generalized_minor: fundamental index out of range");
    F one = one_like(g.at(0, 0));
    Matrix<F> m = word_rep_bar_inverse(g.rows(), uword, one) * g *
                  word_rep_bar(g.rows(), vword, one);
    return m.leading_principal_minor(static_cast<size_t>(fund));
}

// Cluster variables of a word seed on a concrete matrix: label -> minor value.
template <class F>
std::map<int, F> word_cluster_values(const DoubleReducedWord& w, const Matrix<F>& g) {
    std::map<int, F> a;
    for (int lab : w.index_labels()) {
        MinorSpec ms = minor_spec(w, lab);
        a[lab] = generalized_minor(g, ms.fund, ms.uword, ms.vword);
    }
    return a;
}

// Requires the stored Cartan matrix to be finite type A; returns n = rank + 1.
inline size_t type_a_size(const CartanData& c) {
    if (c.affine || c.tag != "A" + std::to_string(c.rank))
        throw Error("group: matrix realization requires finite type A, got " + c.tag);
    return static_cast<size_t>(c.rank) + 1;
}

// x-chart of a double reduced word (type A only):
//   x(X) = prod_i X_{-i}^{w_i^v} * prod_k (E or F)_{|i_k|} X_k^{w_{|i_k|}^v},
// with E for positive letters and F for negative ones, using GL_n lifts of
// the coweight powers (so the result represents a projective point).
template <class F>
Matrix<F> evaluate_x_chart(const DoubleReducedWord& w, const std::map<int, F>& x) {
    size_t n = type_a_size(w.cartan);
    const F one = one_like(x.begin()->second);
    Matrix<F> g = Matrix<F>::identity(n, one);
    for (int j = 1; j <= w.cartan.rank; ++j)
        g = g * coweight_power(n, j, x.at(-j));
    for (int l = 1; l <= w.m(); ++l) {
        int a = w.abs_letter(l);
        g = g * (w.eps(l) > 0 ? elem_E(n, a, one) : elem_F(n, a, one));
        g = g * coweight_power(n, a, x.at(l));
    }
    return g;
}

// Group element carrying an X-point of the glued 2r-index seed (type A):
//   g(X) = prod_{i=1..r} F_i X_{i+r}^{w_i^v} * prod_{i=1..r} E_i X_i^{w_i^v}.
// One step of the factorization dynamics swaps the two halves, which is a
// conjugation, so char-poly invariants of g(X) are conserved along orbits.
template <class F>
Matrix<F> sigma_c_group_element(const CartanData& c, const std::map<int, F>& x) {
    size_t n = type_a_size(c);
    const F one = one_like(x.begin()->second);
    Matrix<F> g = Matrix<F>::identity(n, one);
    for (int i = 1; i <= c.rank; ++i)
        g = g * elem_F(n, i, one) * coweight_power(n, i, x.at(i + c.rank));
    for (int i = 1; i <= c.rank; ++i)
        g = g * elem_E(n, i, one) * coweight_power(n, i, x.at(i));
    return g;
}

// One step of the factorization dynamics on X-coordinates of the glued seed,
// computed as the cluster automorphism attached to its distinguished
// sigma-period.
inline std::map<int, Rational> factorization_step(const SigmaC& sc,
                                                  const std::map<int, Rational>& x,
                                                  bool check_period = false) {
    return cluster_automorphism_values(sc.seed, sc.mutation_sequence, sc.sigma, x,
                                       Flavor::X, check_period);
}

template <class F>
F trace(const Matrix<F>& g) {
    if (g.rows() != g.cols()) throw Error("trace: non-square matrix");
    F t = zero_like(g.at(0, 0));
    for (size_t i = 0; i < g.rows(); ++i) t += g.at(i, i);
    return t;
}

// Elementary symmetric functions e_1..e_n of the eigenvalues (sums of
// principal minors), via power sums and Newton's identities; exact over F.
template <class F>
std::vector<F> char_poly_coeffs(const Matrix<F>& g) {
    size_t n = g.rows();
    F one = one_like(g.at(0, 0));
    std::vector<F> p;  // power sums tr(g^k)
    Matrix<F> pw = g;
    for (size_t k = 1; k <= n; ++k) {
        p.push_back(trace(pw));
        if (k < n) pw = pw * g;
    }
    std::vector<F> e{one};  // e_0 = 1
    for (size_t k = 1; k <= n; ++k) {
        F s = zero_like(one);
        F sign = one;
        for (size_t i = 1; i <= k; ++i) {
            s += sign * e[k - i] * p[i - 1];
            sign = zero_like(one) - sign;
        }
        F kf = zero_like(one);
        for (size_t i = 0; i < k; ++i) kf += one;
        e.push_back(s / kf);
    }
    return std::vector<F>(e.begin() + 1, e.end());
}

// Scalar- and conjugation-invariant ratios I_k = e_k(g)^n / e_n(g)^k for
// k = 1..n-1; well-defined on projective classes since e_k(λg) = λ^k e_k(g).
template <class F>
std::vector<F> invariant_ratios(const Matrix<F>& g) {
    size_t n = g.rows();
    std::vector<F> e = char_poly_coeffs(g);
    if (e[n - 1].is_zero()) throw Error("invariant_ratios: singular matrix");
    std::vector<F> out;
    for (size_t k = 1; k < n; ++k)
        out.push_back(e[k - 1].pow(static_cast<long>(n)) /
                      e[n - 1].pow(static_cast<long>(k)));
    return out;
}

}  // namespace clusterdyn
