#include "taufan/tfclass.hpp"

#include "taufan/errors.hpp"
#include "taufan/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>

namespace taufan {

namespace {

QMat identity_matrix(int n) {
    QMat m = QMat::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::string ray_string(const QVec& v) {
    std::ostringstream os;
    for (long r = 0; r < v.size(); ++r) {
        if (r) os << ",";
        os << rat_to_string(v(r));
    }
    return os.str();
}

// shared skeleton of the two cone projections: drop the rays already in the
// class cone, map the rest, renormalize, and insist on independence
Cone project_cone_by(const QMat& map, const Cone& own, const Cone& target,
                     const char* which) {
    std::set<std::string> own_rays;
    for (long k = 0; k < own.rays.cols(); ++k) {
        own_rays.insert(ray_string(own.rays.col(k)));
    }
    std::vector<QVec> images;
    for (long k = 0; k < target.rays.cols(); ++k) {
        if (own_rays.count(ray_string(target.rays.col(k)))) continue;
        QVec img = primitive_integer_vector(map * target.rays.col(k));
        if (is_zero_vec(img)) {
            throw DependentProjection(std::string(which) +
                                      ": ray projects to zero: " +
                                      ray_string(target.rays.col(k)));
        }
        images.push_back(img);
    }
    Cone out;
    out.ambient_dim = static_cast<int>(map.rows());
    out.rays = QMat::Zero(map.rows(), static_cast<long>(images.size()));
    for (size_t i = 0; i < images.size(); ++i) {
        out.rays.col(static_cast<long>(i)) = images[i];
    }
    if (rank_of(out.rays) != out.dim()) {
        throw DependentProjection(std::string(which) +
                                  ": projected rays are dependent");
    }
    return out;
}

}  // namespace

FanData build_fan(Enumeration& e) {
    const int n = e.alg->vertices();
    FanData fan;
    fan.classes.reserve(e.pairs.size());
    for (size_t idx = 0; idx < e.pairs.size(); ++idx) {
        const PairData& p = e.pairs[idx];
        TFClass c;
        c.pair_index = static_cast<int>(idx);
        c.cone = cone_of_pair(p, n);
        c.wide = wide_subcategory(e, p);

        const QMat& b = c.cone.rays;
        if (b.cols() == 0) {
            c.nu = identity_matrix(n);
        } else {
            // normal equations keep the projection rational: the Gram matrix
            // of independent rays is invertible
            auto gram_inv = inverse(QMat(b.transpose() * b));
            if (!gram_inv) {
                throw DependentRays("build_fan: singular Gram matrix at pair " +
                                    std::to_string(idx));
            }
            c.nu = identity_matrix(n) - b * (*gram_inv) * b.transpose();
        }

        const int m = static_cast<int>(c.wide.simples.size());
        c.pi = QMat::Zero(m, n);
        for (int i = 0; i < m; ++i) {
            const WideSimple& s = c.wide.simples[static_cast<size_t>(i)];
            const IVec dv = s.rep.dimension_vector();
            for (int j = 0; j < n; ++j) {
                c.pi(i, j) = Rat(dv[static_cast<size_t>(j)]) / Rat(s.d);
            }
        }
        // rho is pi viewed on span(cone)^perp; the factorization through nu
        // must be exact, which pins the simples against the cone
        c.rho = c.pi;
        if (!same_mat(c.pi, QMat(c.rho * c.nu))) {
            throw IdentityCheckFailed("pi != rho o nu at pair " +
                                      std::to_string(idx));
        }
        fan.classes.push_back(std::move(c));
    }
    return fan;
}

QVec nu_project(const TFClass& c, const QVec& v) { return c.nu * v; }

QVec pi_project(const TFClass& c, const QVec& v) { return c.pi * v; }

Cone nu_project_cone(const TFClass& c, const Cone& target) {
    return project_cone_by(c.nu, c.cone, target, "nu_project_cone");
}

Cone pi_project_cone(const TFClass& c, const Cone& target) {
    return project_cone_by(c.pi, c.cone, target, "pi_project_cone");
}

bool tf_leq(const Enumeration& e, const FanData& fan, int i, int j, bool checked) {
    const bool summand = pair_is_summand(e.pairs[static_cast<size_t>(i)],
                                         e.pairs[static_cast<size_t>(j)]);
    if (checked) {
        const Cone& ci = fan.classes[static_cast<size_t>(i)].cone;
        const Cone& cj = fan.classes[static_cast<size_t>(j)].cone;
        bool geometric = true;
        for (long k = 0; k < ci.rays.cols(); ++k) {
            if (!closed_cone_contains(cj, ci.rays.col(k))) {
                geometric = false;
                break;
            }
        }
        if (geometric != summand) {
            throw CrossCheckMismatch(
                "summand test and cone containment disagree for pairs " +
                std::to_string(i) + " and " + std::to_string(j));
        }
    }
    return summand;
}

bool simples_basis_check(const TFClass& c, int n) {
    const int m = static_cast<int>(c.wide.simples.size());
    if (m != n - c.cone.dim()) return false;
    QMat dims = QMat::Zero(n, m);
    for (int i = 0; i < m; ++i) {
        const IVec dv = c.wide.simples[static_cast<size_t>(i)].rep.dimension_vector();
        for (int j = 0; j < n; ++j) {
            dims(j, i) = Rat(dv[static_cast<size_t>(j)]);
        }
    }
    return rank_of(dims) == m;
}

std::vector<Wall> walls_for_render(const Enumeration& e, const FanData& fan) {
    const int n = e.alg->vertices();
    std::map<std::pair<std::string, std::string>, Wall> merged;
    for (const TFClass& c : fan.classes) {
        if (c.cone.dim() != n - 1) continue;
        // the wide key is already fingerprint-sorted, so label order is
        // canonical and the dim vectors stay aligned with it
        std::vector<std::string> label;
        std::vector<IVec> dims;
        for (size_t i = 0; i < c.wide.key.size(); ++i) {
            label.push_back(c.wide.key[i].to_string());
            dims.push_back(c.wide.simples[i].rep.dimension_vector());
        }
        std::string joined;
        for (const std::string& part : label) joined += part + ";";
        const std::pair<std::string, std::string> key{rays_key(c.cone.rays), joined};
        if (!merged.count(key)) merged[key] = Wall{c.cone.rays, label, dims};
    }
    std::vector<Wall> out;
    out.reserve(merged.size());
    for (auto& kv : merged) out.push_back(std::move(kv.second));
    return out;
}

}  // namespace taufan
