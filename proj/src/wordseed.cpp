#include "clusterdyn/wordseed.hpp"

namespace clusterdyn {

int DoubleReducedWord::kplus(int label) const {
    int a = abs_letter(label);
    for (int l = label + 1; l <= m(); ++l) {
        if (l == 0) continue;
        if (abs_letter(l) == a) return l;
    }
    return m() + 1;
}

std::vector<int> DoubleReducedWord::index_labels() const {
    std::vector<int> labels;
    for (int j = 1; j <= cartan.rank; ++j) labels.push_back(-j);
    for (int l = 1; l <= m(); ++l) labels.push_back(l);
    return labels;
}

std::vector<int> DoubleReducedWord::negative_subword() const {
    std::vector<int> w;
    for (int e : entries)
        if (e < 0) w.push_back(-e);
    return w;
}

std::vector<int> DoubleReducedWord::positive_subword() const {
    std::vector<int> w;
    for (int e : entries)
        if (e > 0) w.push_back(e);
    return w;
}

void DoubleReducedWord::validate() const {
    for (int e : entries)
        if (e == 0 || std::abs(e) > cartan.rank)
            throw Error("DoubleReducedWord: letter out of range");
    if (!is_reduced(cartan, negative_subword()))
        throw Error("DoubleReducedWord: negative subword is not reduced");
    if (!is_reduced(cartan, positive_subword()))
        throw Error("DoubleReducedWord: positive subword is not reduced");
}

DoubleReducedWord coxeter_double_word(const CartanData& c) {
    DoubleReducedWord w;
    w.cartan = c;
    for (int j = 1; j <= c.rank; ++j) w.entries.push_back(-j);
    for (int j = 1; j <= c.rank; ++j) w.entries.push_back(j);
    w.validate();
    return w;
}

Seed build_word_seed(const DoubleReducedWord& w) {
    w.validate();
    int m = w.m();
    Seed s;
    s.indices = w.index_labels();
    size_t n = s.indices.size();
    for (int k : s.indices)
        if (k < 0 || w.kplus(k) > m) s.frozen.insert(k);
    s.d.resize(n);
    for (size_t p = 0; p < n; ++p)
        s.d[p] = w.cartan.dprime[w.abs_letter(s.indices[p]) - 1];
    s.B.assign(n, std::vector<Rational>(n, Rational(0)));
    for (size_t pj = 0; pj < n; ++pj) {
        int j = s.indices[pj];
        int jp = w.kplus(j);
        for (size_t pk = 0; pk < n; ++pk) {
            int k = s.indices[pk];
            if (j == k) continue;
            int kp = w.kplus(k);
            long sum = 0;
            if (j == kp) sum += w.eps(j);
            if (jp == k) sum -= w.eps(k);
            if (k < j && j < kp && j > 0) sum += w.eps(j);
            if (k < jp && jp < kp && jp <= m) sum -= w.eps(jp);
            if (j < k && k < jp && k > 0) sum -= w.eps(k);
            if (j < kp && kp < jp && kp <= m) sum += w.eps(kp);
            if (sum == 0) continue;
            long cab = w.cartan.C[w.abs_letter(k) - 1][w.abs_letter(j) - 1];
            s.B[pj][pk] = Rational(cab * sum) / Rational(2);
        }
    }
    s.validate();
    return s;
}

QMatrix lemma_block_matrix(const CartanData& c) {
    int r = c.rank;
    auto ct = [&](int i, int j) { return Rational(c.C[j][i]); };
    auto cu = [&](int i, int j) {
        return Rational((i == j ? 1 : 0) + (i < j ? c.C[j][i] : 0));
    };
    auto cl = [&](int i, int j) {
        return Rational((i == j ? 1 : 0) + (i > j ? c.C[j][i] : 0));
    };
    Rational half = Rational(1) / Rational(2);
    QMatrix b(3 * r, 3 * r, Rational(0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            b.at(i, j) = cu(i, j) - half * ct(i, j);
            b.at(i, r + j) = cl(i, j);
            b.at(r + i, j) = -cu(i, j);
            b.at(r + i, 2 * r + j) = -cl(i, j);
            b.at(2 * r + i, r + j) = cu(i, j);
            b.at(2 * r + i, 2 * r + j) = cl(i, j) - half * ct(i, j);
        }
    return b;
}

QMatrix build_B_mod(const DoubleReducedWord& w, const Seed& s) {
    QMatrix b = to_qmatrix(s.B);
    int m = w.m();
    size_t n = s.indices.size();
    for (size_t pj = 0; pj < n; ++pj) {
        int j = s.indices[pj];
        for (size_t pk = 0; pk < n; ++pk) {
            int k = s.indices[pk];
            long bracket = ((w.kplus(j) > m && w.kplus(k) > m) ? 1 : 0) +
                           ((j < 0 && k < 0) ? 1 : 0);
            if (bracket == 0) continue;
            long cab = w.cartan.C[w.abs_letter(k) - 1][w.abs_letter(j) - 1];
            b.at(pj, pk) += Rational(cab * bracket) / Rational(2);
        }
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!b.at(i, j).is_integer())
                throw Error("build_B_mod: non-integer entry at (" +
                            std::to_string(s.indices[i]) + "," +
                            std::to_string(s.indices[j]) + ")");
    return b;
}

SigmaC build_sigma_c(const CartanData& c) {
    int r = c.rank;
    SigmaC out;
    Seed& s = out.seed;
    for (int i = 1; i <= 2 * r; ++i) s.indices.push_back(i);
    s.B.assign(2 * r, std::vector<Rational>(2 * r, Rational(0)));
    s.d.resize(2 * r);
    for (int a = 1; a <= r; ++a) {
        s.d[a - 1] = c.dprime[a - 1];
        s.d[a - 1 + r] = c.dprime[a - 1];
        for (int j = 1; j <= r; ++j) {
            s.B[a - 1][j + r - 1] = Rational(c.C[j - 1][a - 1]);
            s.B[j + r - 1][a - 1] = Rational(-c.C[a - 1][j - 1]);
        }
    }
    s.validate();
    for (int i = 1; i <= r; ++i) out.mutation_sequence.push_back(i);
    for (int i = 1; i <= r; ++i) {
        out.sigma[i] = i + r;
        out.sigma[i + r] = i;
    }
    return out;
}

AmalgamationMap coxeter_amalgamation(const CartanData& c) {
    AmalgamationMap pi;
    for (int j = 1; j <= c.rank; ++j) {
        pi.pi[-j] = j;
        pi.pi[j + c.rank] = j;
        pi.pi[j] = j + c.rank;
    }
    return pi;
}

namespace {

// |i_j| for the Coxeter word labels (-1..-r, 1..2r).
int coxeter_abs(int label, int r) {
    if (label < 0) return -label;
    return label <= r ? label : label - r;
}

WeightVector coxeter_on_weight(const CartanData& c, int a, bool inverse) {
    std::vector<int> word = coxeter_word(c);
    if (inverse) word = inverse_word(word);
    return weyl_act(c, word, fundamental_weight(c, a));
}

}  // namespace

QMatrix twist_matrix_N(const CartanData& c) {
    int r = c.rank;
    QMatrix cm(r, r, Rational(0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) cm.at(i, j) = Rational(c.C[i][j]);
    QMatrix cinv = cm.inverse();
    std::vector<WeightVector> cw, cwinv;
    for (int a = 1; a <= r; ++a) {
        cw.push_back(coxeter_on_weight(c, a, false));
        cwinv.push_back(coxeter_on_weight(c, a, true));
    }
    // <lambda | w_b^v> = sum_i lambda_i (C^{-1})_{b-1, i}
    auto pair_fw = [&](const WeightVector& lam, int b) {
        Rational s(0);
        for (int i = 0; i < r; ++i) s += lam[i] * cinv.at(b - 1, i);
        return s;
    };
    std::vector<int> labels;
    for (int j = 1; j <= r; ++j) labels.push_back(-j);
    for (int l = 1; l <= 2 * r; ++l) labels.push_back(l);
    QMatrix n(3 * r, 3 * r, Rational(0));
    for (size_t pj = 0; pj < labels.size(); ++pj) {
        int j = labels[pj], a = coxeter_abs(j, r);
        for (size_t pk = 0; pk < labels.size(); ++pk) {
            int k = labels[pk], b = coxeter_abs(k, r);
            if (j > r && k < 0)
                n.at(pj, pk) = pair_fw(cw[a - 1], b);
            else if (j < 0 && k > r)
                n.at(pj, pk) = pair_fw(cwinv[a - 1], b);
            else
                n.at(pj, pk) = cinv.at(b - 1, a - 1);
        }
    }
    return n;
}

QMatrix twist_matrix_M(const CartanData& c) {
    int r = c.rank;
    std::vector<WeightVector> cw, cwinv;
    for (int a = 1; a <= r; ++a) {
        cw.push_back(coxeter_on_weight(c, a, false));
        cwinv.push_back(coxeter_on_weight(c, a, true));
    }
    std::vector<int> labels;
    for (int j = 1; j <= r; ++j) labels.push_back(-j);
    for (int l = 1; l <= 2 * r; ++l) labels.push_back(l);
    QMatrix m(3 * r, 3 * r, Rational(0));
    for (size_t pj = 0; pj < labels.size(); ++pj) {
        int j = labels[pj], a = coxeter_abs(j, r);
        for (size_t pk = 0; pk < labels.size(); ++pk) {
            int k = labels[pk], b = coxeter_abs(k, r);
            if (j >= 1 && j <= r && k >= 1 && k <= r)
                m.at(pj, pk) = Rational(j == k ? 1 : 0);
            else if (j > r && k < 0)
                m.at(pj, pk) = cw[a - 1][b - 1];
            else if (j < 0 && k > r)
                m.at(pj, pk) = cwinv[a - 1][b - 1];
        }
    }
    return m;
}

QMatrix m_prime(const Seed& s, const QMatrix& M, const QMatrix& B, int k_label) {
    if (s.is_frozen(k_label))
        throw Error("m_prime: cannot mutate at frozen index " + std::to_string(k_label));
    size_t kp = s.pos(k_label);
    size_t n = s.indices.size();
    auto neg = [](const Rational& x) { return x.is_negative() ? x : Rational(0); };
    QMatrix r = M;
    for (size_t j = 0; j < n; ++j) {
        Rational v = Rational(kp == j ? 2 : 0) - M.at(kp, j);
        for (size_t l = 0; l < n; ++l)
            v += neg(B.at(kp, l) * M.at(l, j)) - neg(B.at(kp, l)) * M.at(l, j);
        r.at(kp, j) = v;
    }
    return r;
}

MinorSpec minor_spec(const DoubleReducedWord& w, int label) {
    MinorSpec ms;
    ms.fund = w.abs_letter(label);
    int cut = std::max(label, 0);
    for (int l = 1; l <= cut; ++l)
        if (w.letter(l) < 0) ms.uword.push_back(-w.letter(l));
    for (int l = w.m(); l > cut; --l)
        if (w.letter(l) > 0) ms.vword.push_back(w.letter(l));
    return ms;
}

}  // namespace clusterdyn
