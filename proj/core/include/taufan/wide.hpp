#pragma once

#include "taufan/mutation.hpp"

namespace taufan {

// column span of the images of all homomorphisms gen -> x
QMat trace_matrix(const Representation& gen, const Representation& x);

// x lies in Fac(gen)
bool trace_in(const Representation& gen, const Representation& x);

// inner is a summand-pair of outer (module ids and support both included)
bool pair_is_summand(const PairData& inner, const PairData& outer);

// the completion realizing the largest torsion class over the given pair
struct BongartzData {
    int pair_index = -1;              // index of the completing pair in e.pairs
    std::vector<int> complement_ids;  // module summands added to the input
};
BongartzData bongartz_completion(Enumeration& e, const PairData& pair);

// the perpendicular subcategory of a pair, presented by its simple objects
struct WideSimple {
    Representation rep;
    long d = 0;  // dim of the endomorphism algebra
};
struct WideData {
    std::vector<int> complement_ids;       // aligned with simples
    std::vector<WideSimple> simples;
    std::vector<ModuleFingerprint> key;    // sorted simple fingerprints
};
WideData wide_subcategory(Enumeration& e, const PairData& pair);

// membership in M-perp cap perp-tauM cap P-perp
bool in_wide(Enumeration& e, const PairData& pair, const Representation& x);

struct TorsionMembership {
    bool in_t = false;     // x in Fac M
    bool in_tbar = false;  // x in perp-tauM cap P-perp
};
TorsionMembership torsion_membership(Enumeration& e, const PairData& pair,
                                     const Representation& x);

// the interval test: target's torsion data sits between Fac M and the
// maximal torsion class of the base pair; the second form reuses a
// precomputed completion of the target
bool in_n(Enumeration& e, const PairData& base, const PairData& target);
bool in_n(Enumeration& e, const PairData& base, const PairData& target,
          const std::vector<int>& target_complement_ids);

}  // namespace taufan
