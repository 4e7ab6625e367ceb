#pragma once

#include "taufan/module_ops.hpp"
#include "taufan/representation.hpp"

#include <map>
#include <vector>

namespace taufan {

// split into indecomposable summands, one entry per copy; throws
// DecompositionUncertain when the search budget runs out before either a
// split or an indecomposability certificate is found
std::vector<Representation> decompose(const Representation& m);

// reseed the randomized part of the splitting schedule (0 restores the
// built-in default); decomposition results are independent of the seed,
// only the search path changes
void set_decompose_seed(unsigned long long seed);

bool is_indecomposable(const Representation& m);

// exact test for two indecomposables: some composite M -> N -> M must stay
// outside the radical of End(M)
bool indecomposables_isomorphic(const Representation& m, const Representation& n);

// full isomorphism test via decomposition and summand matching
bool is_isomorphic(const Representation& m, const Representation& n);

// canonical representative store; modules that are isomorphic get the same
// id, and the first registered representative is kept
class ModuleRegistry {
  public:
    int id_of(const Representation& m);
    // variant for callers that already computed the fingerprint
    int id_of(const Representation& m, ModuleFingerprint fp);
    const Representation& rep(int id) const { return reps_[static_cast<size_t>(id)]; }
    const ModuleFingerprint& fingerprint(int id) const { return fps_[static_cast<size_t>(id)]; }
    int size() const { return static_cast<int>(reps_.size()); }

  private:
    std::vector<Representation> reps_;
    std::vector<ModuleFingerprint> fps_;
    std::map<ModuleFingerprint, std::vector<int>> by_fp_;
};

}  // namespace taufan
