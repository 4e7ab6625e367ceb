#pragma once

#include "taufan/mutation.hpp"

#include <string>
#include <vector>

namespace taufan {

// simplicial rational cone, stored by primitive integer ray generators
struct Cone {
    int ambient_dim = 0;
    QMat rays;  // one column per ray, linearly independent

    int dim() const { return static_cast<int>(rays.cols()); }
};

Cone cone_of_rays(int ambient_dim, const std::vector<QVec>& rays);
Cone cone_of_pair(const PairData& p, int n);

bool closed_cone_contains(const Cone& c, const QVec& v);
bool open_cone_contains(const Cone& c, const QVec& v);

// do the relatively open cones share a point
bool open_cones_overlap(const Cone& c, const Cone& d);

// canonical serialization of a ray set, order-insensitive
std::string rays_key(const QMat& rays);

struct FanReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// pairwise fan axioms: distinct cones, closures meeting in the common face,
// relatively open cones disjoint
FanReport verify_fan(const std::vector<Cone>& cones);

}  // namespace taufan
