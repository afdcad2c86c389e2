#include "clusterdyn/seed.hpp"

namespace clusterdyn {

void Seed::validate() const {
    size_t n = indices.size();
    if (B.size() != n || d.size() != n)
        throw Error("Seed: dimension mismatch");
    for (const auto& row : B)
        if (row.size() != n) throw Error("Seed: B not square");
    {
        std::set<int> seen(indices.begin(), indices.end());
        if (seen.size() != n) throw Error("Seed: duplicate indices");
    }
    for (int f : frozen)
        if (!has_index(f)) throw Error("Seed: frozen label " + std::to_string(f) +
                                       " not an index");
    for (size_t i = 0; i < n; ++i)
        if (d[i] <= 0) throw Error("Seed: nonpositive symmetrizer");
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            bool both_frozen = is_frozen(indices[i]) && is_frozen(indices[j]);
            if (!both_frozen && !B[i][j].is_integer())
                throw Error("Seed: non-integer entry B[" + std::to_string(indices[i]) +
                            "][" + std::to_string(indices[j]) + "] off frozen-frozen pair");
            if (B[i][j] * Rational(d[j]) != -(B[j][i] * Rational(d[i])))
                throw Error("Seed: skew-symmetrizability fails at (" +
                            std::to_string(indices[i]) + "," + std::to_string(indices[j]) +
                            ")");
        }
    }
}

json Seed::to_json() const {
    json j;
    j["indices"] = indices;
    j["frozen"] = std::vector<int>(frozen.begin(), frozen.end());
    json rows = json::array();
    for (const auto& row : B) {
        json r = json::array();
        for (const auto& e : row) r.push_back(e.str());
        rows.push_back(r);
    }
    j["B"] = rows;
    j["d"] = d;
    return j;
}

Seed Seed::from_json(const json& j) {
    Seed s;
    s.indices = j.at("indices").get<std::vector<int>>();
    for (int f : j.at("frozen").get<std::vector<int>>()) s.frozen.insert(f);
    for (const auto& row : j.at("B")) {
        std::vector<Rational> r;
        for (const auto& e : row) r.push_back(Rational::from_string(e.get<std::string>()));
        s.B.push_back(std::move(r));
    }
    s.d = j.at("d").get<std::vector<long>>();
    s.validate();
    return s;
}

Seed mutate_B(const Seed& s, int k) {
    if (!s.has_index(k)) throw Error("mutate_B: unknown index " + std::to_string(k));
    if (s.is_frozen(k)) throw Error("mutate_B: frozen index " + std::to_string(k));
    size_t kp = s.pos(k);
    size_t n = s.size();
    Seed r = s;
    Rational half(1, 2);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i == kp || j == kp) {
                r.B[i][j] = -s.B[i][j];
            } else {
                Rational aik = s.B[i][kp].abs();
                Rational akj = s.B[kp][j].abs();
                r.B[i][j] = s.B[i][j] + half * (aik * s.B[kp][j] + s.B[i][kp] * akj);
            }
        }
    }
    return r;
}

Seed mutate_B(const Seed& s, const std::vector<int>& seq) {
    Seed r = s;
    for (int k : seq) r = mutate_B(r, k);
    return r;
}

}  // namespace clusterdyn
