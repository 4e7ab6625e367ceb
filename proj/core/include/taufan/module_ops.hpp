#pragma once

#include "taufan/representation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace taufan {

// basis of Hom(M, N); each element is a (total_dim N) x (total_dim M)
// matrix that is zero outside the vertex diagonal blocks
std::vector<QMat> hom_basis(const Representation& m, const Representation& n);
int hom_dim(const Representation& m, const Representation& n);
std::vector<QMat> end_basis(const Representation& m);

// radical of a unital matrix algebra given by a spanning set that is closed
// under multiplication; returns a basis of the radical (characteristic zero
// trace form)
std::vector<QMat> matrix_algebra_radical(const std::vector<QMat>& basis);

// rad M = (rad A) M, as an embedded submodule
Representation radical_submodule(const Representation& m, QMat* inclusion = nullptr);
Representation top_of(const Representation& m, QMat* projection = nullptr);

// map between direct sums of projectives, stored by the algebra elements
// that induce it: elems[c][r] lies in e_{src[c]} A e_{dst[r]} and acts on a
// module element z of P(src[c]) by z -> z * elems[c][r]
struct ProjMap {
    const Algebra* alg = nullptr;
    std::vector<int> src;  // vertex of each projective copy in the domain
    std::vector<int> dst;  // vertex of each projective copy in the codomain
    std::vector<std::vector<QVec>> elems;

    Representation src_rep() const;
    Representation dst_rep() const;
    // the induced linear map between src_rep() and dst_rep() coordinates
    QMat realize() const;
    IVec g_vector() const;  // dst multiplicities minus src multiplicities
};

ProjMap zero_proj_map(const Algebra& a, std::vector<int> src, std::vector<int> dst);

// coordinates of rep(P(v)) are the paths out of v in algebra basis order;
// these translate between that coordinate space and algebra elements
QVec projective_coords_to_element(const Algebra& a, int v, const QVec& coords);
QVec element_to_projective_coords(const Algebra& a, int v, const QVec& x);

// offsets[copy][vertex] = position of that copy's vertex component in the
// concatenated coordinates of rep(P(verts[0])) + rep(P(verts[1])) + ...
std::vector<std::vector<int>> projective_sum_offsets(const Algebra& a,
                                                     const std::vector<int>& verts);

// right multiplication by x in e_a A e_b, as a map rep(P(a)) -> rep(P(b))
QMat realize_projective_hom(const Algebra& a_, int pa, int pb, const QVec& x);

// projective cover P -> M; returns the cover map in representation
// coordinates along with the multiset of projective vertices
struct Cover {
    std::vector<int> verts;
    Representation proj;
    QMat map;  // total_dim(M) x total_dim(proj)
};
Cover projective_cover(const Representation& m);

// minimal projective presentation P1 -> P0 -> M -> 0
ProjMap minimal_presentation(const Representation& m);

Representation cokernel_of(const ProjMap& d);

IVec g_vector_of(const Representation& m);

// Auslander-Reiten translate, computed through the syzygy transpose over the
// opposite algebra; requires the matching opposite algebra of m's algebra
Representation tau_of(const Representation& m, const Algebra& aop);
// same, starting from an already computed minimal presentation
Representation tau_from_presentation(const ProjMap& d, const Algebra& aop);

// dual of a left module over aop, as a left module over a (and conversely)
Representation dual_rep(const Representation& n, const Algebra& a);

// cheap isomorphism invariants used to shortlist candidates before the
// exact isomorphism test
struct ModuleFingerprint {
    IVec dimv;
    int end_dim = 0;
    IVec hom_to_proj;
    IVec gvec;

    bool operator==(const ModuleFingerprint&) const = default;
    bool operator<(const ModuleFingerprint& o) const;
    std::string to_string() const;
};
ModuleFingerprint fingerprint_of(const Representation& m);
// same, reusing an already computed minimal presentation for the g-vector
ModuleFingerprint fingerprint_of(const Representation& m, const ProjMap& pres);

}  // namespace taufan
