#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "rational.hpp"

namespace clusterdyn {

using json = nlohmann::json;

// Seed: ordered index labels (possibly negative), frozen subset, exchange
// matrix B over Q, and positive integer skew-symmetrizers d.
// Invariants: B_ij integral unless i and j are both frozen; B_ij d_j = -B_ji d_i.
struct Seed {
    std::vector<int> indices;
    std::set<int> frozen;
    std::vector<std::vector<Rational>> B;  // by position in `indices`
    std::vector<long> d;

    size_t size() const { return indices.size(); }

    size_t pos(int label) const {
        for (size_t i = 0; i < indices.size(); ++i)
            if (indices[i] == label) return i;
        throw Error("Seed: unknown index " + std::to_string(label));
    }

    bool has_index(int label) const {
        for (int i : indices)
            if (i == label) return true;
        return false;
    }

    bool is_frozen(int label) const { return frozen.count(label) > 0; }

    const Rational& b(int i, int j) const { return B[pos(i)][pos(j)]; }
    long d_of(int label) const { return d[pos(label)]; }

    std::vector<int> unfrozen() const {
        std::vector<int> u;
        for (int i : indices)
            if (!is_frozen(i)) u.push_back(i);
        return u;
    }

    // Checks all structural invariants; throws on violation.
    void validate() const;

    bool operator==(const Seed& o) const {
        return indices == o.indices && frozen == o.frozen && B == o.B && d == o.d;
    }
    bool operator!=(const Seed& o) const { return !(*this == o); }

    json to_json() const;
    static Seed from_json(const json& j);
};

// Exchange-matrix mutation at the unfrozen index k (Fomin-Zelevinsky rule,
// transposed convention): mu_k(B)_ij = -B_ij if i=k or j=k, else
// B_ij + (|B_ik| B_kj + B_ik |B_kj|)/2.
Seed mutate_B(const Seed& s, int k);

Seed mutate_B(const Seed& s, const std::vector<int>& seq);

}  // namespace clusterdyn
