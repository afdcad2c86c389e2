#pragma once

#include <optional>

#include "torus.hpp"

namespace clusterdyn {

// Surjection pi from source indices onto target indices plus the target's
// frozen subset. Gluing conditions are checked by validate_amalgamation.
struct AmalgamationMap {
    std::map<int, int> pi;
    std::set<int> target_frozen;

    int image(int i) const {
        auto it = pi.find(i);
        if (it == pi.end())
            throw Error("AmalgamationMap: index " + std::to_string(i) + " not mapped");
        return it->second;
    }

    std::vector<int> fiber(int j) const {
        std::vector<int> f;
        for (const auto& [a, b] : pi)
            if (b == j) f.push_back(a);
        return f;
    }

    std::vector<int> target_indices() const {
        std::set<int> t;
        for (const auto& [a, b] : pi) t.insert(b);
        return std::vector<int>(t.begin(), t.end());
    }
};

struct AmalgamationViolation {
    int condition;       // 1..4 per the definition
    int witness_i;
    int witness_j;
    std::string detail;
};

// Checks conditions (1)-(4) of the amalgamation definition:
// (1) pi(i)=pi(j), i!=j  =>  i,j frozen and B_ij = 0;
// (2) target entries are the fiber sums (definitional; checked as
//     well-definedness of the fiber-sum seed, always constructible);
// (3) images of unfrozen indices are unfrozen in the target;
// (4) d_i depends only on pi(i), giving the target symmetrizers.
std::optional<AmalgamationViolation> validate_amalgamation(const Seed& s,
                                                           const AmalgamationMap& pi);

// Fiber-sum seed: B~_kl = sum_{pi(i)=k, pi(j)=l} B_ij.
Seed amalgamate(const Seed& s, const AmalgamationMap& pi);

// Pullback on coordinates: source index i reads the target function at pi(i).
SymbolicTorusPoint amalgamation_pullback(const AmalgamationMap& pi,
                                         const std::vector<int>& source_indices,
                                         const SymbolicTorusPoint& target_point);

// Pushforward on X-points: X~_j = prod_{pi(i)=j} X_i.
SymbolicTorusPoint amalgamation_pushforward(const AmalgamationMap& pi,
                                            const SymbolicTorusPoint& source_point);
std::map<int, Rational> amalgamation_pushforward(const AmalgamationMap& pi,
                                                 const std::map<int, Rational>& source_point);

struct AmalgamationHypothesisError : Error {
    using Error::Error;
};
struct AmalgamationTheoremError : Error {
    using Error::Error;
};

// Verifies that mutation at k commutes with amalgamation: as seeds, and as
// the pushforward/mutation square on a symbolic X-point. Throws
// AmalgamationHypothesisError when pi is invalid for s or mu_k(s)
// (the proposition's hypothesis), AmalgamationTheoremError on an actual
// failure of the commuting square.
bool check_amalgamation_commutes(const Seed& s, const AmalgamationMap& pi, int k);

}  // namespace clusterdyn
