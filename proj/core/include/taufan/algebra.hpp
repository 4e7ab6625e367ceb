#pragma once

#include "taufan/quiver.hpp"
#include "taufan/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace taufan {

// A residue path, stored in traversal order. The trivial path at vertex v
// has empty arrows and source = target = v.
struct PathWord {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    bool operator==(const PathWord& o) const {
        return source == o.source && arrows == o.arrows;
    }
};

std::string path_to_string(const PathWord& w, const Quiver& q);

// The bound quiver algebra as a based algebra: residue-path basis plus a
// multiplication table. Elements are dense coefficient vectors over the
// basis. Immutable after build_algebra.
class Algebra {
  public:
    AlgebraPresentation pres;
    std::vector<PathWord> basis;  // ordered by (length, lex on arrow indices)

    int vertices() const { return pres.quiver.vertices; }
    int dim() const { return static_cast<int>(basis.size()); }

    // basis index of the trivial path at v
    int unit_index(int v) const { return v; }
    // basis index of arrow a (arrows always survive in an admissible quotient)
    int arrow_index(int a) const { return arrow_basis_[static_cast<size_t>(a)]; }

    // product x * y = "x after y": requires target(y) = source(x) summand-wise.
    QVec multiply(const QVec& x, const QVec& y) const;
    QVec unit_element() const;  // sum of all trivial paths
    QVec basis_element(int i) const;

    // indices of basis paths with the given source/target vertex
    const std::vector<int>& paths_from_to(int source, int target) const;
    const std::vector<int>& paths_from(int source) const;

    // mult_table[i][j]: sparse normal form of basis[i] * basis[j]
    const std::vector<std::pair<int, Rat>>& table(int i, int j) const {
        return mult_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }

  private:
    friend Algebra build_algebra(const AlgebraPresentation&);
    std::vector<int> arrow_basis_;
    std::vector<std::vector<std::vector<std::pair<int, Rat>>>> mult_;
    std::vector<std::vector<std::vector<int>>> by_src_tgt_;  // [src][tgt] -> basis indices
    std::vector<std::vector<int>> by_src_;
};

// Build the quotient of the path algebra by the relation ideal, reducing the
// path space filtered by length and certifying finite dimensionality at
// pres.length_bound. Throws NotAdmissible, InconsistentRelation,
// NotFiniteDimensional.
Algebra build_algebra(const AlgebraPresentation& pres);

// The opposite algebra (reversed quiver, reversed relations).
Algebra build_opposite(const Algebra& a);

// Transport an element through the canonical anti-isomorphism A -> A^op
// (reverse every path and renormalize in the opposite basis).
QVec op_element(const Algebra& a, const Algebra& aop, const QVec& x);

}  // namespace taufan
