#pragma once

#include "taufan/algebra.hpp"
#include "taufan/rational.hpp"

#include <string>
#include <vector>

namespace taufan {

// finite dimensional left module, stored as a representation of the quiver:
// one space per vertex and a covariant map per arrow.  A path acts by
// composing its arrow maps in traversal order, so act(p) v applies the first
// traversed arrow first.
struct Representation {
    const Algebra* alg = nullptr;
    std::vector<int> dims;          // one entry per vertex
    std::vector<QMat> arrow_maps;   // per arrow a : i -> j, a (dims[j] x dims[i]) matrix

    int vertex_dim(int v) const { return dims[static_cast<size_t>(v)]; }
    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    IVec dimension_vector() const;

    const QMat& arrow_map(int a) const { return arrow_maps[static_cast<size_t>(a)]; }

    // composed action of a path word; the result maps the source component
    // into the target component
    QMat path_action(const PathWord& w) const;

    // action of a full algebra element as one matrix on the direct sum of
    // the vertex components, blocks ordered by vertex
    QMat element_action(const QVec& x) const;

    // offset of vertex v inside the concatenated coordinate space
    int block_offset(int v) const;

    // true when every relation of the presentation evaluates to zero
    bool satisfies_relations() const;
};

Representation zero_rep(const Algebra& a);
Representation simple_rep(const Algebra& a, int v);
// P(v) = A e_v, with the paths out of v as coordinates
Representation projective_rep(const Algebra& a, int v);
Representation direct_sum(const std::vector<Representation>& parts);
Representation direct_sum_pow(const Representation& m, int k);

// submodule spanned by the given columns (coordinates in the concatenated
// space); the span is closed under all arrow maps before slicing
Representation sub_representation(const Representation& m, const QMat& span_cols,
                                  QMat* inclusion = nullptr);
// quotient by the closed span; projection matrix optional
Representation quotient_representation(const Representation& m, const QMat& span_cols,
                                       QMat* projection = nullptr);

std::string rep_to_string(const Representation& m);

}  // namespace taufan
