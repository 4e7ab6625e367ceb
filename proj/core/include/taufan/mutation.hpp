#pragma once

#include "taufan/pairs.hpp"

#include <map>
#include <vector>

namespace taufan {

// a chain map between two-term complexes, components in degrees -1 and 0
struct ChainMap {
    ProjMap m1, m0;
};

// all maps X -> U_j for j != k, stacked and reduced to a minimal left
// add(U)-approximation; the right-hand version stacks U_j -> X
ChainMap minimal_left_approximation(const std::vector<TwoTerm>& slots, size_t k,
                                    std::vector<int>* copy_slots = nullptr);
ChainMap minimal_right_approximation(const std::vector<TwoTerm>& slots, size_t k,
                                     std::vector<int>* copy_slots = nullptr);

// exchange the summand in slot k; exactly one of the cone and cocone
// directions reduces to a two-term complex, which is returned
TwoTerm mutate_slot(const std::vector<TwoTerm>& slots, size_t k);

// a support tau-tilting pair or one of its summand-closed faces
struct PairData {
    std::vector<int> m_ids;    // sorted module registry ids
    std::vector<int> p_verts;  // sorted vertices of the shifted projectives
    bool complete = false;     // |m_ids| + |p_verts| == n
    std::vector<IVec> g_rays;  // one per summand, modules first
};

struct Enumeration {
    const Algebra* alg = nullptr;
    const Algebra* aop = nullptr;
    ModuleRegistry registry;
    std::vector<PairData> pairs;              // complete pairs first, then faces
    int complete_count = 0;                   // pairs[0..complete_count) are complete
    std::vector<std::vector<int>> neighbors;  // complete idx x slot -> complete idx
    std::map<int, ProjMap> pres_cache;        // registry id -> minimal presentation
    std::map<int, IVec> g_cache;              // registry id -> g-vector
    std::map<int, Representation> tau_cache;  // registry id -> tau of that module
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> index;

    // id_of plus the presentation work shared between the fingerprint, the
    // g-vector, the slot complexes and tau
    int register_module(const Representation& m);
    const ProjMap& pres_of_id(int id);
    const Representation& tau_of_id(int id);
    const IVec& g_of_id(int id);
    std::vector<TwoTerm> slot_complexes(const PairData& p);
    Representation module_of(const PairData& p) const;
    int find_pair(const std::vector<int>& m_ids, const std::vector<int>& p_verts) const;
};

// breadth-first mutation walk from (A, 0), then summand closure; throws
// CapExceeded when more than `cap` complete pairs appear
Enumeration enumerate_pairs(const Algebra& a, const Algebra& aop, int cap = 10000);

}  // namespace taufan
