#include "taufan/cone.hpp"

#include "taufan/errors.hpp"
#include "taufan/linalg.hpp"
#include "taufan/simplex.hpp"

#include <algorithm>
#include <sstream>

namespace taufan {

Cone cone_of_rays(int ambient_dim, const std::vector<QVec>& rays) {
    Cone c;
    c.ambient_dim = ambient_dim;
    c.rays = QMat::Zero(ambient_dim, static_cast<long>(rays.size()));
    for (size_t i = 0; i < rays.size(); ++i) {
        c.rays.col(static_cast<long>(i)) = primitive_integer_vector(rays[i]);
    }
    if (rank_of(c.rays) != c.dim()) {
        throw DependentRays("cone_of_rays: " + std::to_string(rays.size()) +
                            " rays of rank " + std::to_string(rank_of(c.rays)));
    }
    return c;
}

Cone cone_of_pair(const PairData& p, int n) {
    std::vector<QVec> rays;
    for (const IVec& g : p.g_rays) {
        QVec v(n);
        for (int i = 0; i < n; ++i) v(i) = Rat(g[static_cast<size_t>(i)]);
        rays.push_back(v);
    }
    return cone_of_rays(n, rays);
}

namespace {

std::optional<QVec> cone_coefficients(const Cone& c, const QVec& v) {
    if (c.dim() == 0) {
        if (is_zero_vec(v)) return QVec::Zero(0);
        return std::nullopt;
    }
    auto y = solve(c.rays, v);
    if (!y) return std::nullopt;
    // rays are independent, so the coefficients are unique; reject v outside
    // the span
    if (!is_zero_vec(c.rays * *y - v)) return std::nullopt;
    return y;
}

}  // namespace

bool closed_cone_contains(const Cone& c, const QVec& v) {
    auto y = cone_coefficients(c, v);
    if (!y) return false;
    for (long i = 0; i < y->size(); ++i) {
        if ((*y)(i) < 0) return false;
    }
    return true;
}

bool open_cone_contains(const Cone& c, const QVec& v) {
    auto y = cone_coefficients(c, v);
    if (!y) return false;
    for (long i = 0; i < y->size(); ++i) {
        if ((*y)(i) <= 0) return false;
    }
    return true;
}

std::string rays_key(const QMat& rays) {
    std::vector<std::string> parts;
    for (long c = 0; c < rays.cols(); ++c) {
        std::ostringstream os;
        for (long r = 0; r < rays.rows(); ++r) {
            if (r) os << ",";
            os << rat_to_string(rays(r, c));
        }
        parts.push_back(os.str());
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "|";
        out += parts[i];
    }
    return out;
}

namespace {

std::vector<std::string> ray_strings(const Cone& c) {
    std::vector<std::string> out;
    for (long i = 0; i < c.rays.cols(); ++i) {
        std::ostringstream os;
        for (long r = 0; r < c.rays.rows(); ++r) {
            if (r) os << ",";
            os << rat_to_string(c.rays(r, i));
        }
        out.push_back(os.str());
    }
    return out;
}

// closures must intersect exactly in the cone on the shared rays: no point
// of the intersection may involve a non-shared ray with positive weight
bool face_violation(const Cone& c, const Cone& d, std::string* detail) {
    const auto cs = ray_strings(c);
    const auto ds = ray_strings(d);
    const int nc = c.dim(), nd = d.dim();
    QMat sys(c.ambient_dim + 1, nc + nd);
    sys.setZero();
    for (int j = 0; j < nc; ++j) sys.col(j).head(c.ambient_dim) = c.rays.col(j);
    for (int j = 0; j < nd; ++j) sys.col(nc + j).head(c.ambient_dim) = -d.rays.col(j);
    for (int k = 0; k < nc + nd; ++k) {
        const bool shared = k < nc ? std::find(ds.begin(), ds.end(), cs[static_cast<size_t>(k)]) != ds.end()
                                   : std::find(cs.begin(), cs.end(), ds[static_cast<size_t>(k - nc)]) != cs.end();
        if (shared) continue;
        QMat a = sys;
        a.row(c.ambient_dim).setZero();
        a(c.ambient_dim, k) = 1;
        QVec b = QVec::Zero(c.ambient_dim + 1);
        b(c.ambient_dim) = 1;
        if (lp_feasible(a, b)) {
            *detail = "non-shared ray " +
                      (k < nc ? cs[static_cast<size_t>(k)] : ds[static_cast<size_t>(k - nc)]) +
                      " appears in the closure intersection";
            return true;
        }
    }
    return false;
}

}  // namespace

// a shared point of the relatively open parts has all coefficients >= 1
// after scaling
bool open_cones_overlap(const Cone& c, const Cone& d) {
    const int nc = c.dim(), nd = d.dim();
    if (nc == 0 || nd == 0) return false;  // only the origin is open there
    QMat a(c.ambient_dim, nc + nd);
    for (int j = 0; j < nc; ++j) a.col(j) = c.rays.col(j);
    for (int j = 0; j < nd; ++j) a.col(nc + j) = -d.rays.col(j);
    // substitute y = 1 + y': A y' = -(A * 1)
    QVec ones = QVec::Constant(nc + nd, 1);
    QVec b = -(a * ones);
    return lp_feasible(a, b);
}

FanReport verify_fan(const std::vector<Cone>& cones) {
    FanReport rep;
    for (size_t i = 0; i < cones.size(); ++i) {
        for (size_t j = i + 1; j < cones.size(); ++j) {
            if (rays_key(cones[i].rays) == rays_key(cones[j].rays)) {
                rep.ok = false;
                rep.violations.push_back("cones " + std::to_string(i) + " and " +
                                         std::to_string(j) + " have identical ray sets");
                continue;
            }
            std::string detail;
            if (face_violation(cones[i], cones[j], &detail)) {
                rep.ok = false;
                rep.violations.push_back("cones " + std::to_string(i) + " and " +
                                         std::to_string(j) + ": " + detail);
            }
            if (open_cones_overlap(cones[i], cones[j])) {
                rep.ok = false;
                rep.violations.push_back("cones " + std::to_string(i) + " and " +
                                         std::to_string(j) +
                                         ": relatively open parts intersect");
            }
        }
    }
    return rep;
}

}  // namespace taufan
