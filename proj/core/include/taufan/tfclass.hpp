#pragma once

#include "taufan/cone.hpp"
#include "taufan/wide.hpp"

#include <string>
#include <vector>

namespace taufan {

// one TF-equivalence class: the cone of a basic pair together with its
// perpendicular data and the three projection matrices
struct TFClass {
    int pair_index = -1;
    Cone cone;
    WideData wide;
    QMat nu;   // n x n orthogonal projection onto span(cone)^perp
    QMat pi;   // m x n, row i = dim X_i / d_i
    QMat rho;  // m x n restriction of pi to span(cone)^perp
};

struct FanData {
    std::vector<TFClass> classes;  // aligned with e.pairs
};

// builds every class and verifies pi = rho o nu exactly on each one
FanData build_fan(Enumeration& e);

QVec nu_project(const TFClass& c, const QVec& v);
QVec pi_project(const TFClass& c, const QVec& v);

// image of another cone under the class projection, restricted to the rays
// not already in the class cone; images are renormalized to primitive
// vectors and must stay nonzero and independent
Cone nu_project_cone(const TFClass& c, const Cone& target);
Cone pi_project_cone(const TFClass& c, const Cone& target);

// TF order: class i sits below class j. checked mode re-derives the answer
// from closed-cone containment of the rays and aborts on disagreement
bool tf_leq(const Enumeration& e, const FanData& fan, int i, int j, bool checked);

// dim vectors of the simples are independent and count = n - dim(cone)
bool simples_basis_check(const TFClass& c, int n);

// codimension-one classes, merged when they share both ray set and label
struct Wall {
    QMat rays;
    std::vector<std::string> label;  // fingerprints of the class simples
    std::vector<IVec> dims;          // dim vectors of the same simples
};
std::vector<Wall> walls_for_render(const Enumeration& e, const FanData& fan);

}  // namespace taufan
