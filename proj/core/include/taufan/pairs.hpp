#pragma once

#include "taufan/decompose.hpp"
#include "taufan/linalg.hpp"
#include "taufan/module_ops.hpp"

#include <optional>
#include <string>
#include <vector>

namespace taufan {

// a ProjMap doubles as a two-term complex of projectives concentrated in
// degrees -1 (src) and 0 (dst)
using TwoTerm = ProjMap;

// composition of maps between direct sums of projectives: first d1, then d2
ProjMap compose_elem(const ProjMap& d1, const ProjMap& d2);
ProjMap add_elem(const ProjMap& a, const ProjMap& b);
bool elem_is_zero(const ProjMap& a);

// coordinates on the space of maps between two lists of projectives
struct ElemSpace {
    const Algebra* alg = nullptr;
    std::vector<int> src, dst;
    // flat coordinate layout: for each (c, r), the basis paths of
    // e_{src[c]} A e_{dst[r]}
    std::vector<std::vector<std::vector<int>>> paths;
    std::vector<std::vector<int>> offset;  // starting position of cell (c, r)
    int dim = 0;

    QVec pack(const ProjMap& m) const;
    ProjMap unpack(const QVec& v) const;
};
ElemSpace elem_space(const Algebra& a, std::vector<int> src, std::vector<int> dst);

// matrix of f |-> pack(f then y) over the unit maps of `in`; column order
// matches the coordinate order of `in`
SparseMat precompose_matrix(const ElemSpace& in, const ElemSpace& out, const ProjMap& y);
// matrix of f |-> pack(x then f) over the unit maps of `in`
SparseMat postcompose_matrix(const ElemSpace& in, const ElemSpace& out, const ProjMap& x);

// direct sum of two-term complexes
TwoTerm sum_complex(const std::vector<TwoTerm>& parts);
TwoTerm shifted_projective_complex(const Algebra& a, int v);

// chain maps X -> Y modulo homotopy; each entry is the pair (f_{-1}, f_0)
std::vector<std::pair<ProjMap, ProjMap>> hom_k_basis(const TwoTerm& x, const TwoTerm& y);
int hom_k_dim(const TwoTerm& x, const TwoTerm& y);

// dim Hom_K(X, Y[1])
int hom_k_shift_dim(const TwoTerm& x, const TwoTerm& y);

// presilting test: Hom_K(C, C[1]) = 0 for the direct sum of the parts
bool is_presilting(const std::vector<TwoTerm>& parts);

// strip contractible direct summands of the three-term complex a; b,
// returning the reduced differentials in place
void minimize_three_term(ProjMap& a, ProjMap& b);

// true when the module/projective pair is tau-rigid; cross-validated by the
// caller against the two-term condition where applicable
bool is_tau_rigid_pair(const Representation& m, const std::vector<int>& p_verts,
                       const Algebra& aop);

// split a minimal two-term complex into its module cokernel and the shifted
// projective multiplicities
struct PairParts {
    Representation module_part;       // H^0, possibly decomposable
    std::vector<int> shifted_verts;   // one entry per P(v)[1] copy
};
PairParts extract_pair_parts(const TwoTerm& c);

// inverse of a unit element of the corner algebra e_v A e_v
QVec invert_corner_unit(const Algebra& a, int v, const QVec& x);

}  // namespace taufan
