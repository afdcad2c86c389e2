#pragma once

#include <map>
#include <string>
#include <vector>

#include "group.hpp"

namespace clusterdyn {

// A Q-system attached to an affine tag: the recurrence
//   (Q_n^{(a)})^2 = Q_{n-1}^{(a)} Q_{n+1}^{(a)} + prod_{b != a} (Q_n^{(b)})^{-C_ba}
// in the Cartan matrix C of the associated finite type, together with its
// normalized variant where the product term enters with a plus sign:
//   Qt_{n-1} Qt_{n+1} = Qt_n^2 + prod_{b != a} (Qt_n^{(b)})^{-C_ba}.
// Supported inputs: simply-laced untwisted affine tags ("A2~", "D4~", "E6~"),
// twisted tags ("A5(2)", "D5(2)", "E6(2)", "D4(3)"), or directly the finite
// type of the Cartan matrix ("A2", "B2", ...). Nonsimply-laced untwisted
// affine tags and "A2n(2)" are documented unsupported errors.
struct QSystemSpec {
    std::string affine_tag;  // as requested (empty when built from a finite tag)
    CartanData cartan;       // finite type; C drives the recurrence
};

QSystemSpec make_qsystem(const std::string& tag);

// Two consecutive layers of the recurrence: lower = Q_n, upper = Q_{n+1},
// keyed by node 1..rank. All entries must be nonzero.
template <class V>
struct QStateT {
    long n = 0;
    std::map<int, V> lower, upper;
    bool normalized = true;
};
using QState = QStateT<Rational>;
using SymbolicQState = QStateT<RationalFunction>;

enum class QDirection { forward, backward };

namespace detail {

// prod_{b != a} (layer_b)^{-C_ba}.
template <class V>
V q_monomial(const CartanData& c, const std::map<int, V>& layer, int a) {
    V m = one_like(layer.begin()->second);
    for (int b = 1; b <= c.rank; ++b) {
        if (b == a) continue;
        long e = -c.C[b - 1][a - 1];
        if (e != 0) m *= layer.at(b).pow(e);
    }
    return m;
}

}  // namespace detail

// One step of the recurrence. Forward solves layer n+2 from layers (n, n+1),
// backward solves layer n-1 from (n, n+1); the two are mutually inverse. The
// `normalized` flag selects the sign of the monomial term as above.
template <class V>
QStateT<V> q_step(const QSystemSpec& spec, const QStateT<V>& st, QDirection dir,
                  bool normalized) {
    const CartanData& c = spec.cartan;
    for (int a = 1; a <= c.rank; ++a)
        if (st.lower.at(a).is_zero() || st.upper.at(a).is_zero())
            throw Error("q_step: zero entry at node " + std::to_string(a));
    QStateT<V> out;
    out.normalized = normalized;
    if (dir == QDirection::forward) {
        out.n = st.n + 1;
        out.lower = st.upper;
        for (int a = 1; a <= c.rank; ++a) {
            V mono = detail::q_monomial(c, st.upper, a);
            V num = st.upper.at(a) * st.upper.at(a);
            num = normalized ? num + mono : num - mono;
            if (num.is_zero())
                throw Error("q_step: orbit hits zero at node " + std::to_string(a) +
                            ", level " + std::to_string(st.n + 2));
            out.upper[a] = num / st.lower.at(a);
        }
    } else {
        out.n = st.n - 1;
        out.upper = st.lower;
        for (int a = 1; a <= c.rank; ++a) {
            V mono = detail::q_monomial(c, st.lower, a);
            V num = st.lower.at(a) * st.lower.at(a);
            num = normalized ? num + mono : num - mono;
            if (num.is_zero())
                throw Error("q_step: orbit hits zero at node " + std::to_string(a) +
                            ", level " + std::to_string(st.n - 1));
            out.lower[a] = num / st.upper.at(a);
        }
    }
    return out;
}

// Exponents x with eps_a = exp(i pi x_a) solving prod_a eps_a^{C_ab} = -1 for
// every b, i.e. x = (C^t)^{-1} (1,...,1); the rescaling Qt = eps Q turns the
// plain recurrence into the normalized one.
std::vector<Rational> normalization_exponents(const CartanData& c);

// Renders the recurrence at each node as a display string, e.g.
// "(Q^(2))^2 = Q^(2)- Q^(2)+ + (Q^(1))^3" with the empty product printed as
// "1"; used to pin the per-type relation lists.
std::vector<std::string> relation_lines(const QSystemSpec& spec);

// Comparison report for the cluster realization on the glued 2r-index seed.
struct QClusterReport {
    bool ok = true;
    int bad_node = 0;   // node a of the first mismatch
    long bad_level = 0; // level k of the first mismatch
};

// Symbolic check to the given depth: iterating the distinguished cluster
// automorphism on the glued seed reproduces the normalized recurrence under
// the identification (A_1..A_r, A_{r+1}..A_{2r}) = (layer 0, layer 1), and
// coordinate i+r at step k equals coordinate i at step k+1.
QClusterReport q_vs_cluster(const QSystemSpec& spec, int depth);

// Numeric variant of the same check at a given positive initial state.
QClusterReport q_vs_cluster_numeric(const QSystemSpec& spec, int depth,
                                    const QState& init);

// Conserved quantities of a type-A state: push the layers through the
// A-to-X coordinate map of the glued seed, build the matrix of the
// factorization dynamics, and return its invariant ratios. Conserved under
// q_step (normalized). Only type A has a matrix realization here.
std::vector<Rational> q_conserved(const QSystemSpec& spec, const QState& st);

}  // namespace clusterdyn
