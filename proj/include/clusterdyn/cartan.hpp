#pragma once

#include <string>
#include <vector>

#include "matrix.hpp"

namespace clusterdyn {

// Cartan matrix with symmetrizers and type bookkeeping. C_ij = <alpha_i^v | alpha_j>.
// For twisted affine tags X_N^(k) the stored matrix is that of the folded
// finite type Y_M; `source_tag` records the requested affine tag.
struct CartanData {
    std::string tag;         // the finite or untwisted-affine tag of the stored matrix
    std::string source_tag;  // tag as requested (differs from `tag` for twisted input)
    int rank = 0;            // matrix size
    std::vector<std::vector<long>> C;
    std::vector<long> dprime;
    bool affine = false;     // stored matrix is of untwisted affine type (singular)

    bool is_twisted_source() const { return source_tag != tag; }

    void validate() const;
};

// Supported tags: finite "A1".."A8", "B2"+, "C2"+, "D4"+, "E6".."E8", "F4",
// "G2" (any rank for the infinite families); untwisted affine "A1~", "A2~",
// ..., "B3~"+, "C2~"+, "D4~"+, "E6~".."E8~", "F4~", "G2~"; twisted affine
// "A3(2)", "A5(2)", ... (odd N), "D3(2)"+, "E6(2)", "D4(3)" which fold to
// C/B/F4/G2. Requesting "A2(2)", "A4(2)", ... is an explicit unsupported
// error: those relations cannot be rearranged into an exchange relation.
CartanData catalog(const std::string& type_tag);

// All finite tags of rank <= max_rank, catalog order.
std::vector<std::string> finite_tags(int max_rank);

// All untwisted affine tags with finite part of rank <= max_rank.
std::vector<std::string> affine_tags(int max_rank);

}  // namespace clusterdyn
