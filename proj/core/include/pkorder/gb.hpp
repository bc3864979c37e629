#pragma once

#include <vector>

#include "pkorder/frac.hpp"

namespace pkorder {

// Generators of a submodule of R^rank, one backend ring.
struct VectorSet {
    BaseRing ring;
    int rank = 0;
    std::vector<PolyVec> vectors;  // rows of length rank
};

struct Membership {
    bool contains = false;
    PolyVec certificate;  // coefficients on the original generators
};

// Strong basis of the row span of the inputs under the position-over-term
// order (earlier positions dominate, then higher degree). Basis rows are kept
// augmented with their expression in the inputs, so membership certificates
// and syzygies of the inputs fall out of the same completion.
class GbBasis {
  public:
    BaseRing ring;
    int rank = 0;     // ambient rank of the module
    int ninputs = 0;  // number of input vectors

    // canonical inter-reduced rows of length rank + ninputs (head | cert)
    std::vector<PolyVec> aug;

    std::vector<PolyVec> rows() const;       // head parts with nonzero head
    std::vector<PolyVec> row_certs() const;  // matching certificates
    std::vector<PolyVec> syzygies() const;   // tails of head-zero rows

    Membership reduce(const PolyVec& v) const;
    PolyVec normal_form(const PolyVec& v) const;
};

GbBasis strong_basis(const BaseRing& ring, int rank, const std::vector<PolyVec>& input,
                     const Limits& lim = {});

// Generators of { c in R^k : sum c_i * input_i = 0 }.
std::vector<PolyVec> syzygies_of(const BaseRing& ring, int rank,
                                 const std::vector<PolyVec>& input, const Limits& lim = {});

// Split syzygies of the concatenation [a; b]: pairs (ca, cb) with
// ca*a + cb*b = 0, returned as rows (ca | cb).
std::vector<PolyVec> split_syzygies(const BaseRing& ring, int rank,
                                    const std::vector<PolyVec>& a,
                                    const std::vector<PolyVec>& b, const Limits& lim = {});

}  // namespace pkorder
