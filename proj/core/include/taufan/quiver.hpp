#pragma once

#include "taufan/rational.hpp"

#include <string>
#include <vector>

namespace taufan {

struct Arrow {
    std::string name;
    int from = 0;  // 0-based vertex
    int to = 0;
};

struct Quiver {
    int vertices = 0;
    std::vector<Arrow> arrows;
};

// One summand c * (a_1 ... a_k) of a relation, arrows in traversal order:
// a_1 is walked first.
struct RelationTerm {
    Rat coeff;
    std::vector<int> arrows;  // indices into Quiver::arrows
};

// A rational combination of parallel paths of length >= 2.
struct Relation {
    std::vector<RelationTerm> terms;
};

struct AlgebraPresentation {
    std::string name;
    Quiver quiver;
    std::vector<Relation> relations;
    int length_bound = 12;
};

}  // namespace taufan
