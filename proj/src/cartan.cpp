#include "clusterdyn/cartan.hpp"

#include <numeric>

namespace clusterdyn {

namespace {

struct Edge {
    int i, j;    // 0-based nodes
    long cij;    // C[i][j]
    long cji;    // C[j][i]
};

std::vector<std::vector<long>> from_edges(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<long>> C(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) C[i][i] = 2;
    for (const auto& e : edges) {
        C[e.i][e.j] = e.cij;
        C[e.j][e.i] = e.cji;
    }
    return C;
}

// Positive integer symmetrizers: propagate d_j = d_i * C_ij / C_ji along edges
// of the (connected) diagram, then clear denominators.
std::vector<long> symmetrizers(const std::vector<std::vector<long>>& C) {
    size_t n = C.size();
    std::vector<Rational> d(n);
    std::vector<bool> done(n, false);
    d[0] = Rational(1);
    done[0] = true;
    for (bool progress = true; progress;) {
        progress = false;
        for (size_t i = 0; i < n; ++i) {
            if (!done[i]) continue;
            for (size_t j = 0; j < n; ++j) {
                if (done[j] || C[i][j] == 0) continue;
                d[j] = d[i] * Rational(C[i][j]) / Rational(C[j][i]);
                done[j] = true;
                progress = true;
            }
        }
    }
    for (size_t i = 0; i < n; ++i)
        if (!done[i]) throw Error("catalog: disconnected diagram");
    // Scale to coprime positive integers.
    long lcm_den = 1;
    for (const auto& x : d)
        lcm_den = std::lcm(lcm_den, mpz_class(x.raw().get_den()).get_si());
    std::vector<long> out(n);
    long g = 0;
    for (size_t i = 0; i < n; ++i) {
        out[i] = (d[i] * Rational(lcm_den)).to_long();
        g = std::gcd(g, out[i]);
    }
    for (auto& x : out) x /= g;
    return out;
}

std::vector<Edge> path_edges(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, -1, -1});
    return e;
}

// Finite-type diagrams. Orientations of the multiple edges are fixed so the
// exchange relations of Sigma_C reproduce the twisted Q-system relation lists.
std::vector<Edge> finite_edges(char family, int r) {
    switch (family) {
        case 'A':
            if (r < 1) throw Error("catalog: bad rank for type A");
            return path_edges(r);
        case 'B': {
            if (r < 2) throw Error("catalog: bad rank for type B");
            auto e = path_edges(r);
            e.back() = {r - 2, r - 1, -1, -2};  // node r short
            return e;
        }
        case 'C': {
            if (r < 2) throw Error("catalog: bad rank for type C");
            auto e = path_edges(r);
            e.back() = {r - 2, r - 1, -2, -1};  // node r long
            return e;
        }
        case 'D': {
            if (r < 4) throw Error("catalog: bad rank for type D");
            auto e = path_edges(r - 1);
            e.push_back({r - 3, r - 1, -1, -1});
            return e;
        }
        case 'E': {
            if (r < 6 || r > 8) throw Error("catalog: bad rank for type E");
            // Bourbaki: chain 1-3-4-5-...-r with 2 attached to 4.
            std::vector<Edge> e{{0, 2, -1, -1}, {1, 3, -1, -1}};
            for (int i = 2; i + 1 < r; ++i) e.push_back({i, i + 1, -1, -1});
            return e;
        }
        case 'F': {
            if (r != 4) throw Error("catalog: bad rank for type F");
            return {{0, 1, -1, -1}, {1, 2, -2, -1}, {2, 3, -1, -1}};  // nodes 3,4 long
        }
        case 'G': {
            if (r != 2) throw Error("catalog: bad rank for type G");
            return {{0, 1, -3, -1}};  // node 2 long
        }
        default:
            throw Error("catalog: unknown family");
    }
}

// Untwisted affine diagrams: node 0 (stored last, index r) attached per the
// highest root of the finite part.
std::vector<Edge> affine_edges(char family, int r) {
    std::vector<Edge> e = finite_edges(family, r);
    int zero = r;  // 0-based index of the affine node
    switch (family) {
        case 'A':
            if (r == 1) return {{0, 1, -2, -2}};
            e.push_back({zero, 0, -1, -1});
            e.push_back({zero, r - 1, -1, -1});
            return e;
        case 'B':
            if (r < 3) throw Error("catalog: affine B needs rank >= 3");
            e.push_back({zero, 1, -1, -1});
            return e;
        case 'C':
            e.push_back({zero, 0, -1, -2});  // affine node long
            return e;
        case 'D':
            e.push_back({zero, 1, -1, -1});
            return e;
        case 'E':
            if (r == 6) e.push_back({zero, 1, -1, -1});
            if (r == 7) e.push_back({zero, 0, -1, -1});
            if (r == 8) e.push_back({zero, 7, -1, -1});
            return e;
        case 'F':
            e.push_back({zero, 3, -1, -1});  // attach to the long end
            return e;
        case 'G':
            e.push_back({zero, 1, -1, -1});  // attach to the long node
            return e;
        default:
            throw Error("catalog: unknown family");
    }
}

CartanData make_finite(char family, int r, const std::string& tag) {
    CartanData c;
    c.tag = tag;
    c.source_tag = tag;
    c.rank = r;
    c.C = from_edges(r, finite_edges(family, r));
    c.dprime = symmetrizers(c.C);
    c.affine = false;
    c.validate();
    return c;
}

}  // namespace

void CartanData::validate() const {
    if (rank <= 0 || static_cast<int>(C.size()) != rank)
        throw Error("CartanData: bad dimensions");
    for (const auto& row : C)
        if (static_cast<int>(row.size()) != rank) throw Error("CartanData: not square");
    for (int i = 0; i < rank; ++i) {
        if (C[i][i] != 2) throw Error("CartanData: diagonal entry != 2");
        for (int j = 0; j < rank; ++j) {
            if (i != j && C[i][j] > 0) throw Error("CartanData: positive off-diagonal");
            if ((C[i][j] == 0) != (C[j][i] == 0)) throw Error("CartanData: asymmetric zeros");
            if (dprime[i] * C[i][j] != dprime[j] * C[j][i])
                throw Error("CartanData: symmetrizer identity fails");
        }
        if (dprime[i] <= 0) throw Error("CartanData: nonpositive symmetrizer");
    }
}

CartanData catalog(const std::string& type_tag) {
    std::string t = type_tag;
    if (t.size() < 2) throw Error("catalog: unknown tag '" + t + "'");
    char family = t[0];

    // Twisted affine tags: "A5(2)", "D5(2)", "E6(2)", "D4(3)".
    auto paren = t.find('(');
    if (paren != std::string::npos) {
        if (t.back() != ')') throw Error("catalog: unknown tag '" + t + "'");
        int N = std::stoi(t.substr(1, paren - 1));
        std::string kappa = t.substr(paren + 1, t.size() - paren - 2);
        CartanData c;
        if (family == 'A' && kappa == "2") {
            if (N % 2 == 0)
                throw Error("catalog: A" + std::to_string(N) +
                            "(2) has no cluster realization: its Q-system relation "
                            "cannot be rearranged into an exchange relation");
            int r = (N + 1) / 2;
            if (r < 2) throw Error("catalog: unknown tag '" + t + "'");
            c = make_finite('C', r, "C" + std::to_string(r));
        } else if (family == 'D' && kappa == "2") {
            int r = N - 1;
            if (r < 2) throw Error("catalog: unknown tag '" + t + "'");
            c = make_finite('B', r, "B" + std::to_string(r));
        } else if (family == 'E' && N == 6 && kappa == "2") {
            c = make_finite('F', 4, "F4");
        } else if (family == 'D' && N == 4 && kappa == "3") {
            c = make_finite('G', 2, "G2");
        } else {
            throw Error("catalog: unknown tag '" + t + "'");
        }
        c.source_tag = type_tag;
        return c;
    }

    bool affine = t.back() == '~';
    int r = std::stoi(t.substr(1, t.size() - 1 - (affine ? 1 : 0)));
    if (!affine) return make_finite(family, r, type_tag);

    CartanData c;
    c.tag = type_tag;
    c.source_tag = type_tag;
    c.rank = (family == 'A' && r == 1) ? 2 : r + 1;
    c.C = from_edges(c.rank, affine_edges(family, r));
    c.dprime = symmetrizers(c.C);
    c.affine = true;
    c.validate();
    return c;
}

std::vector<std::string> finite_tags(int max_rank) {
    std::vector<std::string> tags;
    for (int r = 1; r <= max_rank; ++r) tags.push_back("A" + std::to_string(r));
    for (int r = 2; r <= max_rank; ++r) tags.push_back("B" + std::to_string(r));
    for (int r = 2; r <= max_rank; ++r) tags.push_back("C" + std::to_string(r));
    for (int r = 4; r <= max_rank; ++r) tags.push_back("D" + std::to_string(r));
    for (int r = 6; r <= std::min(max_rank, 8); ++r) tags.push_back("E" + std::to_string(r));
    if (max_rank >= 4) tags.push_back("F4");
    if (max_rank >= 2) tags.push_back("G2");
    return tags;
}

std::vector<std::string> affine_tags(int max_rank) {
    std::vector<std::string> tags;
    for (int r = 1; r <= max_rank; ++r) tags.push_back("A" + std::to_string(r) + "~");
    for (int r = 3; r <= max_rank; ++r) tags.push_back("B" + std::to_string(r) + "~");
    for (int r = 2; r <= max_rank; ++r) tags.push_back("C" + std::to_string(r) + "~");
    for (int r = 4; r <= max_rank; ++r) tags.push_back("D" + std::to_string(r) + "~");
    for (int r = 6; r <= std::min(max_rank, 8); ++r)
        tags.push_back("E" + std::to_string(r) + "~");
    if (max_rank >= 4) tags.push_back("F4~");
    if (max_rank >= 2) tags.push_back("G2~");
    return tags;
}

}  // namespace clusterdyn
