#include "clusterdyn/qsystem.hpp"

namespace clusterdyn {

namespace {

bool is_simply_laced_letter(char l) { return l == 'A' || l == 'D' || l == 'E'; }

// The affine tag whose Q-system the glued seed of this finite type realizes:
// simply-laced types give their untwisted affinization, the others the
// twisted type folding onto them.
std::string associated_affine_tag(const CartanData& c) {
    if (is_simply_laced_letter(c.tag[0])) return c.tag + "~";
    if (c.tag[0] == 'B') return "D" + std::to_string(c.rank + 1) + "(2)";
    if (c.tag[0] == 'C') return "A" + std::to_string(2 * c.rank - 1) + "(2)";
    if (c.tag == "F4") return "E6(2)";
    if (c.tag == "G2") return "D4(3)";
    throw Error("make_qsystem: no affine tag for " + c.tag);
}

}  // namespace

QSystemSpec make_qsystem(const std::string& tag) {
    if (tag.empty()) throw Error("make_qsystem: empty tag");
    QSystemSpec spec;
    if (tag.back() == '~') {
        std::string base = tag.substr(0, tag.size() - 1);
        if (base.empty() || !is_simply_laced_letter(base[0]))
            throw Error("make_qsystem: untwisted type " + tag +
                        " is not simply-laced; its Q-system has no cluster "
                        "realization here");
        spec.cartan = catalog(base);
        spec.affine_tag = tag;
        return spec;
    }
    if (tag.find('(') != std::string::npos) {
        spec.cartan = catalog(tag);  // folds to the finite type, rejects A2n(2)
        spec.affine_tag = tag;
        return spec;
    }
    spec.cartan = catalog(tag);
    if (spec.cartan.affine)
        throw Error("make_qsystem: expected a finite or affine Q-system tag, got " + tag);
    spec.affine_tag = associated_affine_tag(spec.cartan);
    return spec;
}

std::vector<Rational> normalization_exponents(const CartanData& c) {
    if (c.affine) throw Error("normalization_exponents: singular Cartan matrix");
    int r = c.rank;
    QMatrix ct(r, r, Rational(0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) ct.at(i, j) = Rational(c.C[j][i]);
    QMatrix inv = ct.inverse();
    std::vector<Rational> x(r, Rational(0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) x[i] += inv.at(i, j);
    // check sum_a C_ab x_a = 1 for every b
    for (int b = 0; b < r; ++b) {
        Rational s(0);
        for (int a = 0; a < r; ++a) s += Rational(c.C[a][b]) * x[a];
        if (s != Rational(1))
            throw Error("normalization_exponents: identity fails at node " +
                        std::to_string(b + 1));
    }
    return x;
}

std::vector<std::string> relation_lines(const QSystemSpec& spec) {
    const CartanData& c = spec.cartan;
    std::vector<std::string> lines;
    for (int a = 1; a <= c.rank; ++a) {
        std::string mono;
        for (int b = 1; b <= c.rank; ++b) {
            if (b == a) continue;
            long e = -c.C[b - 1][a - 1];
            if (e == 0) continue;
            if (!mono.empty()) mono += " ";
            std::string q = "Q^(" + std::to_string(b) + ")_n";
            mono += e == 1 ? q : "(" + q + ")^" + std::to_string(e);
        }
        if (mono.empty()) mono = "1";
        std::string q = "Q^(" + std::to_string(a) + ")";
        lines.push_back("(" + q + "_n)^2 = " + q + "_{n-1} " + q + "_{n+1} + " + mono);
    }
    return lines;
}

namespace {

template <class V>
QClusterReport q_vs_cluster_impl(const QSystemSpec& spec, int depth,
                                 const std::map<int, V>& init_point) {
    if (depth < 1) throw Error("q_vs_cluster: depth must be >= 1");
    const CartanData& c = spec.cartan;
    int r = c.rank;
    SigmaC sc = build_sigma_c(c);
    std::map<int, V> point = init_point;
    QStateT<V> q;
    q.n = 0;
    q.normalized = true;
    for (int a = 1; a <= r; ++a) {
        q.lower[a] = point.at(a);
        q.upper[a] = point.at(a + r);
    }
    bool first = true;
    for (int k = 1; k <= depth; ++k) {
        std::map<int, V> next = cluster_automorphism_values(
            sc.seed, sc.mutation_sequence, sc.sigma, point, Flavor::A, first);
        first = false;
        QStateT<V> qn = q_step(spec, q, QDirection::forward, true);
        for (int a = 1; a <= r; ++a) {
            // coordinate a after k steps carries layer k; a+r carries layer k+1
            if (!(next.at(a) == qn.lower.at(a)) || !(next.at(a + r) == qn.upper.at(a)))
                return {false, a, k};
            // the shifted-coordinate identity: old a+r equals new a
            if (!(point.at(a + r) == next.at(a))) return {false, a, k};
        }
        point = next;
        q = qn;
    }
    return {};
}

}  // namespace

QClusterReport q_vs_cluster(const QSystemSpec& spec, int depth) {
    SymbolicTorusPoint p = initial_point(build_sigma_c(spec.cartan).seed, Flavor::A);
    return q_vs_cluster_impl(spec, depth, p.entries);
}

QClusterReport q_vs_cluster_numeric(const QSystemSpec& spec, int depth,
                                    const QState& init) {
    std::map<int, Rational> point;
    for (int a = 1; a <= spec.cartan.rank; ++a) {
        point[a] = init.lower.at(a);
        point[a + spec.cartan.rank] = init.upper.at(a);
    }
    return q_vs_cluster_impl(spec, depth, point);
}

std::vector<Rational> q_conserved(const QSystemSpec& spec, const QState& st) {
    const CartanData& c = spec.cartan;
    if (c.affine || c.tag != "A" + std::to_string(c.rank))
        throw Error("q_conserved: conserved quantities via the matrix realization "
                    "are only available in type A, got " + c.tag);
    SigmaC sc = build_sigma_c(c);
    std::map<int, Rational> a_vals;
    for (int a = 1; a <= c.rank; ++a) {
        a_vals[a] = st.lower.at(a);
        a_vals[a + c.rank] = st.upper.at(a);
    }
    std::map<int, Rational> x = p_map(sc.seed, a_vals);
    return invariant_ratios(sigma_c_group_element(c, x));
}

}  // namespace clusterdyn
