#include "clusterdyn/amalgamation.hpp"

namespace clusterdyn {

std::optional<AmalgamationViolation> validate_amalgamation(const Seed& s,
                                                           const AmalgamationMap& pi) {
    for (int i : s.indices) pi.image(i);  // totality
    for (int i : s.indices) {
        for (int j : s.indices) {
            if (i == j || pi.image(i) != pi.image(j)) continue;
            if (!s.is_frozen(i) || !s.is_frozen(j))
                return AmalgamationViolation{1, i, j, "glued index is unfrozen"};
            if (!s.b(i, j).is_zero())
                return AmalgamationViolation{1, i, j, "glued pair has nonzero exchange entry"};
        }
    }
    for (int i : s.indices) {
        if (!s.is_frozen(i) && pi.target_frozen.count(pi.image(i)))
            return AmalgamationViolation{3, i, pi.image(i),
                                         "unfrozen index maps to frozen target"};
    }
    for (int i : s.indices) {
        for (int j : s.indices) {
            if (pi.image(i) == pi.image(j) && s.d_of(i) != s.d_of(j))
                return AmalgamationViolation{4, i, j, "glued pair has mismatched symmetrizers"};
        }
    }
    return std::nullopt;
}

Seed amalgamate(const Seed& s, const AmalgamationMap& pi) {
    if (auto v = validate_amalgamation(s, pi))
        throw Error("amalgamate: condition (" + std::to_string(v->condition) +
                    ") fails at (" + std::to_string(v->witness_i) + "," +
                    std::to_string(v->witness_j) + "): " + v->detail);
    Seed t;
    t.indices = pi.target_indices();
    t.frozen = pi.target_frozen;
    size_t n = t.indices.size();
    t.B.assign(n, std::vector<Rational>(n, Rational(0)));
    t.d.assign(n, 1);
    std::map<int, size_t> tpos;
    for (size_t i = 0; i < n; ++i) tpos[t.indices[i]] = i;
    for (int i : s.indices) t.d[tpos[pi.image(i)]] = s.d_of(i);
    for (int i : s.indices)
        for (int j : s.indices)
            t.B[tpos[pi.image(i)]][tpos[pi.image(j)]] += s.b(i, j);
    t.validate();
    return t;
}

SymbolicTorusPoint amalgamation_pullback(const AmalgamationMap& pi,
                                         const std::vector<int>& source_indices,
                                         const SymbolicTorusPoint& target_point) {
    if (target_point.flavor != Flavor::X)
        throw Error("amalgamation_pullback: point is not X-flavored");
    SymbolicTorusPoint p;
    p.flavor = Flavor::X;
    for (int i : source_indices) p.entries[i] = target_point.entries.at(pi.image(i));
    return p;
}

namespace {

template <class V>
std::map<int, V> pushforward_values(const AmalgamationMap& pi, const std::map<int, V>& x) {
    std::map<int, V> t;
    for (const auto& [i, v] : x) {
        int j = pi.image(i);
        auto it = t.find(j);
        if (it == t.end()) {
            t[j] = v;
        } else {
            it->second *= v;
        }
    }
    return t;
}

}  // namespace

SymbolicTorusPoint amalgamation_pushforward(const AmalgamationMap& pi,
                                            const SymbolicTorusPoint& source_point) {
    if (source_point.flavor != Flavor::X)
        throw Error("amalgamation_pushforward: point is not X-flavored");
    return {Flavor::X, pushforward_values(pi, source_point.entries)};
}

std::map<int, Rational> amalgamation_pushforward(const AmalgamationMap& pi,
                                                 const std::map<int, Rational>& source_point) {
    return pushforward_values(pi, source_point);
}

bool check_amalgamation_commutes(const Seed& s, const AmalgamationMap& pi, int k) {
    if (auto v = validate_amalgamation(s, pi))
        throw AmalgamationHypothesisError(
            "hypothesis fails: pi invalid for the seed, condition (" +
            std::to_string(v->condition) + ") at (" + std::to_string(v->witness_i) + "," +
            std::to_string(v->witness_j) + ")");
    Seed mutated = mutate_B(s, k);
    if (auto v = validate_amalgamation(mutated, pi))
        throw AmalgamationHypothesisError(
            "hypothesis fails: pi invalid for the mutated seed, condition (" +
            std::to_string(v->condition) + ") at (" + std::to_string(v->witness_i) + "," +
            std::to_string(v->witness_j) + ")");
    int tk = pi.image(k);

    Seed route1 = amalgamate(mutated, pi);
    Seed route2 = mutate_B(amalgamate(s, pi), tk);
    if (route1 != route2)
        throw AmalgamationTheoremError("seed square does not commute at index " +
                                       std::to_string(k));

    // Symbolic X-point square: pushforward then mutate vs mutate then pushforward.
    SymbolicTorusPoint x = initial_point(s, Flavor::X);
    Seed target = amalgamate(s, pi);
    auto down_then_right =
        detail::mutate_X_values(target, amalgamation_pushforward(pi, x).entries, tk);
    auto right_then_down =
        amalgamation_pushforward(pi, SymbolicTorusPoint{
                                         Flavor::X, detail::mutate_X_values(s, x.entries, k)})
            .entries;
    if (down_then_right != right_then_down)
        throw AmalgamationTheoremError("X-point square does not commute at index " +
                                       std::to_string(k));
    return true;
}

}  // namespace clusterdyn
