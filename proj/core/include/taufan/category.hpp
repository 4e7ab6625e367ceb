#pragma once

#include "taufan/tfclass.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace taufan {

// one class of inclusion arrows; reps lists every ordered pair of pair
// indices realizing the class, so later searches never miss a representative
struct Morphism {
    int src_obj = -1;
    int dst_obj = -1;
    std::string key;                        // canonical class key, "" = identity
    std::vector<std::pair<int, int>> reps;  // (lower pair index, upper pair index)

    bool operator==(const Morphism&) const = default;
};

// a finite category materialized as tables; skeletal by construction
struct CategoryTable {
    std::string name;
    std::vector<std::string> objects;       // canonical object keys
    std::vector<std::vector<int>> members;  // object -> absorbed pair indices
    std::vector<Morphism> morphisms;
    std::map<std::pair<int, int>, std::vector<int>> hom;  // (src,dst) -> morphism ids
    std::vector<int> identity;                            // object -> morphism id
    std::map<std::pair<int, int>, int> compose;           // (first, then) -> id

    bool operator==(const CategoryTable&) const = default;
};

// the TF order as a category, one object per class, geometry cross-checks on
// every comparison when checked is set
CategoryTable build_tf_poset(const Enumeration& e, const FanData& fan, bool checked);

// the poset of basic pairs under summand inclusion
CategoryTable build_pair_poset(const Enumeration& e);

// objects = classes grouped by wide key; morphism keys = projected ray sets
// of the target cone under the source class projection
CategoryTable build_geom_category(const Enumeration& e, const FanData& fan,
                                  bool checked);
CategoryTable build_pair_quotient(const Enumeration& e, const FanData& fan);
CategoryTable build_tcm(const Enumeration& e, const FanData& fan);

// covering relations of a poset table, for Hasse rendering
std::vector<std::pair<int, int>> hasse_edges(const CategoryTable& poset);

struct Functor {
    std::vector<int> object_map;    // src object -> dst object
    std::vector<int> morphism_map;  // src morphism -> dst morphism
};

// key-identity functor from the pair quotient to the tau-cluster morphism
// category
Functor functor_f(const CategoryTable& pairquot, const CategoryTable& tcm);

// functor from the pair quotient to the geometric category; the image key is
// re-derived from every representative and must not depend on the choice
Functor functor_g(const Enumeration& e, const FanData& fan,
                  const CategoryTable& pairquot, const CategoryTable& geom);

struct CategoryReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// identities, exhaustive associativity, and compose defined exactly on the
// composable pairs
CategoryReport verify_category_axioms(const CategoryTable& cat);

// functoriality plus bijectivity on object keys and on every Hom set
CategoryReport verify_functor_equivalence(const CategoryTable& src,
                                          const CategoryTable& dst,
                                          const Functor& f);

}  // namespace taufan
