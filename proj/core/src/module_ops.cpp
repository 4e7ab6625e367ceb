#include "taufan/module_ops.hpp"

#include "taufan/errors.hpp"
#include "taufan/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace taufan {

namespace {

// offsets[part][vertex] = position of that part's vertex component inside
// the concatenated coordinates of the direct sum
std::vector<std::vector<int>> part_vertex_offsets(const std::vector<std::vector<int>>& part_dims) {
    const size_t parts = part_dims.size();
    const size_t n = parts ? part_dims[0].size() : 0;
    std::vector<int> vertex_total(n, 0);
    for (const auto& pd : part_dims) {
        for (size_t v = 0; v < n; ++v) vertex_total[v] += pd[v];
    }
    std::vector<int> vertex_off(n, 0);
    int acc = 0;
    for (size_t v = 0; v < n; ++v) {
        vertex_off[v] = acc;
        acc += vertex_total[v];
    }
    std::vector<std::vector<int>> off(parts, std::vector<int>(n, 0));
    std::vector<int> used(n, 0);
    for (size_t p = 0; p < parts; ++p) {
        for (size_t v = 0; v < n; ++v) {
            off[p][v] = vertex_off[v] + used[v];
            used[v] += part_dims[p][v];
        }
    }
    return off;
}

std::vector<std::vector<int>> projective_part_dims_local(const Algebra& a, const std::vector<int>& verts) {
    std::vector<std::vector<int>> pd;
    for (int v : verts) {
        std::vector<int> d(static_cast<size_t>(a.vertices()));
        for (int w = 0; w < a.vertices(); ++w) {
            d[static_cast<size_t>(w)] = static_cast<int>(a.paths_from_to(v, w).size());
        }
        pd.push_back(d);
    }
    return pd;
}

}  // namespace

std::vector<std::vector<int>> projective_sum_offsets(const Algebra& a,
                                                     const std::vector<int>& verts) {
    return part_vertex_offsets(projective_part_dims_local(a, verts));
}

namespace {

// linear system for graded maps f commuting with the arrow actions, with
// unknowns the entries of the f_v in vertex order, row-major per vertex
struct HomSystem {
    SparseMat sys;
    std::vector<int> unknown_off;
    int total_unknowns = 0;

    int uidx(const Representation& m, int v, int i, int j) const {
        return unknown_off[static_cast<size_t>(v)] + i * m.vertex_dim(v) + j;
    }
};

HomSystem hom_system(const Representation& m, const Representation& n) {
    const Quiver& q = m.alg->pres.quiver;
    const int nv = static_cast<int>(m.dims.size());
    HomSystem h;
    h.unknown_off.assign(static_cast<size_t>(nv), 0);
    for (int v = 0; v < nv; ++v) {
        h.unknown_off[static_cast<size_t>(v)] = h.total_unknowns;
        h.total_unknowns += m.vertex_dim(v) * n.vertex_dim(v);
    }
    int rows = 0;
    for (const Arrow& ar : q.arrows) rows += n.vertex_dim(ar.to) * m.vertex_dim(ar.from);
    h.sys = sparse_zero(rows, h.total_unknowns);
    int r = 0;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const int s = q.arrows[a].from, t = q.arrows[a].to;
        const QMat& ma = m.arrow_maps[a];
        const QMat& na = n.arrow_maps[a];
        for (int i = 0; i < n.vertex_dim(t); ++i) {
            for (int j = 0; j < m.vertex_dim(s); ++j) {
                // (f_t M_a - N_a f_s)(i, j) = 0
                SparseRow& out = h.sys.row[static_cast<size_t>(r)];
                for (int k = 0; k < m.vertex_dim(t); ++k) {
                    if (ma(k, j) != 0) out.emplace_back(h.uidx(m, t, i, k), ma(k, j));
                }
                for (int k = 0; k < n.vertex_dim(s); ++k) {
                    if (na(i, k) != 0) out.emplace_back(h.uidx(m, s, k, j), Rat(-na(i, k)));
                }
                ++r;
            }
        }
    }
    // a loop arrow can hit the same unknown from both terms
    sparse_sort_rows(h.sys);
    return h;
}

}  // namespace

std::vector<QMat> hom_basis(const Representation& m, const Representation& n) {
    const int nv = static_cast<int>(m.dims.size());
    HomSystem h = hom_system(m, n);
    QMat ker = sparse_kernel_basis(std::move(h.sys));
    std::vector<QMat> out;
    for (Eigen::Index c = 0; c < ker.cols(); ++c) {
        QMat f = QMat::Zero(n.total_dim(), m.total_dim());
        for (int v = 0; v < nv; ++v) {
            for (int i = 0; i < n.vertex_dim(v); ++i) {
                for (int j = 0; j < m.vertex_dim(v); ++j) {
                    f(n.block_offset(v) + i, m.block_offset(v) + j) = ker(h.uidx(m, v, i, j), c);
                }
            }
        }
        out.push_back(f);
    }
    return out;
}

int hom_dim(const Representation& m, const Representation& n) {
    HomSystem h = hom_system(m, n);
    return h.total_unknowns - sparse_rank(std::move(h.sys));
}

std::vector<QMat> end_basis(const Representation& m) { return hom_basis(m, m); }

std::vector<QMat> matrix_algebra_radical(const std::vector<QMat>& basis) {
    const int k = static_cast<int>(basis.size());
    QMat gram(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            gram(i, j) = (basis[static_cast<size_t>(i)] * basis[static_cast<size_t>(j)]).trace();
        }
    }
    QMat ker = kernel_basis(gram);
    std::vector<QMat> rad;
    for (Eigen::Index c = 0; c < ker.cols(); ++c) {
        QMat x = QMat::Zero(basis.empty() ? 0 : basis[0].rows(),
                            basis.empty() ? 0 : basis[0].cols());
        for (int i = 0; i < k; ++i) x += ker(i, c) * basis[static_cast<size_t>(i)];
        rad.push_back(x);
    }
    return rad;
}

Representation radical_submodule(const Representation& m, QMat* inclusion) {
    const Quiver& q = m.alg->pres.quiver;
    const int D = m.total_dim();
    int cols = 0;
    for (size_t a = 0; a < q.arrows.size(); ++a) cols += static_cast<int>(m.arrow_maps[a].cols());
    QMat gen = QMat::Zero(D, cols);
    int c = 0;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const QMat& ma = m.arrow_maps[a];
        gen.block(m.block_offset(q.arrows[a].to), c, ma.rows(), ma.cols()) = ma;
        c += static_cast<int>(ma.cols());
    }
    return sub_representation(m, gen, inclusion);
}

Representation top_of(const Representation& m, QMat* projection) {
    const Quiver& q = m.alg->pres.quiver;
    const int D = m.total_dim();
    int cols = 0;
    for (size_t a = 0; a < q.arrows.size(); ++a) cols += static_cast<int>(m.arrow_maps[a].cols());
    QMat gen = QMat::Zero(D, cols);
    int c = 0;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const QMat& ma = m.arrow_maps[a];
        gen.block(m.block_offset(q.arrows[a].to), c, ma.rows(), ma.cols()) = ma;
        c += static_cast<int>(ma.cols());
    }
    return quotient_representation(m, gen, projection);
}

Representation ProjMap::src_rep() const {
    std::vector<Representation> parts;
    for (int v : src) parts.push_back(projective_rep(*alg, v));
    return parts.empty() ? zero_rep(*alg) : direct_sum(parts);
}

Representation ProjMap::dst_rep() const {
    std::vector<Representation> parts;
    for (int v : dst) parts.push_back(projective_rep(*alg, v));
    return parts.empty() ? zero_rep(*alg) : direct_sum(parts);
}

QMat ProjMap::realize() const {
    const Algebra& a = *alg;
    auto src_off = part_vertex_offsets(projective_part_dims_local(a, src));
    auto dst_off = part_vertex_offsets(projective_part_dims_local(a, dst));
    int sd = 0, dd = 0;
    for (int v : src) for (int w = 0; w < a.vertices(); ++w) sd += static_cast<int>(a.paths_from_to(v, w).size());
    for (int v : dst) for (int w = 0; w < a.vertices(); ++w) dd += static_cast<int>(a.paths_from_to(v, w).size());
    QMat big = QMat::Zero(dd, sd);
    for (size_t c = 0; c < src.size(); ++c) {
        for (size_t r = 0; r < dst.size(); ++r) {
            const QVec& x = elems[c][r];
            if (is_zero_vec(x)) continue;
            QMat comp = realize_projective_hom(a, src[c], dst[r], x);
            // scatter the per-vertex blocks into the direct sum coordinates
            int crow = 0, ccol = 0;
            for (int w = 0; w < a.vertices(); ++w) {
                const int nrows = static_cast<int>(a.paths_from_to(dst[r], w).size());
                const int ncols = static_cast<int>(a.paths_from_to(src[c], w).size());
                if (nrows && ncols) {
                    big.block(dst_off[r][static_cast<size_t>(w)], src_off[c][static_cast<size_t>(w)],
                              nrows, ncols) = comp.block(crow, ccol, nrows, ncols);
                }
                crow += nrows;
                ccol += ncols;
            }
        }
    }
    return big;
}

IVec ProjMap::g_vector() const {
    IVec g(static_cast<size_t>(alg->vertices()), 0);
    for (int v : dst) ++g[static_cast<size_t>(v)];
    for (int v : src) --g[static_cast<size_t>(v)];
    return g;
}

ProjMap zero_proj_map(const Algebra& a, std::vector<int> src, std::vector<int> dst) {
    ProjMap d;
    d.alg = &a;
    d.src = std::move(src);
    d.dst = std::move(dst);
    d.elems.assign(d.src.size(), std::vector<QVec>(d.dst.size(), QVec::Zero(a.dim())));
    return d;
}

QVec projective_coords_to_element(const Algebra& a, int v, const QVec& coords) {
    QVec x = QVec::Zero(a.dim());
    int pos = 0;
    for (int w = 0; w < a.vertices(); ++w) {
        for (int b : a.paths_from_to(v, w)) x(b) = coords(pos++);
    }
    return x;
}

QVec element_to_projective_coords(const Algebra& a, int v, const QVec& x) {
    int total = static_cast<int>(a.paths_from(v).size());
    QVec coords = QVec::Zero(total);
    int pos = 0;
    for (int w = 0; w < a.vertices(); ++w) {
        for (int b : a.paths_from_to(v, w)) coords(pos++) = x(b);
    }
    return coords;
}

QMat realize_projective_hom(const Algebra& a, int pa, int pb, const QVec& x) {
    const int rows = static_cast<int>(a.paths_from(pb).size());
    const int cols = static_cast<int>(a.paths_from(pa).size());
    QMat m(rows, cols);
    int c = 0;
    for (int w = 0; w < a.vertices(); ++w) {
        for (int b : a.paths_from_to(pa, w)) {
            QVec y = a.multiply(a.basis_element(b), x);
            m.col(c++) = element_to_projective_coords(a, pb, y);
        }
    }
    return m;
}

Cover projective_cover(const Representation& m) {
    const Algebra& a = *m.alg;
    QMat proj;
    Representation t = top_of(m, &proj);
    Cover cov;
    for (int v = 0; v < a.vertices(); ++v) {
        for (int i = 0; i < t.vertex_dim(v); ++i) cov.verts.push_back(v);
    }
    std::vector<Representation> parts;
    for (int v : cov.verts) parts.push_back(projective_rep(a, v));
    cov.proj = parts.empty() ? zero_rep(a) : direct_sum(parts);

    // pick generators of m lifting a basis of the top
    auto off = part_vertex_offsets(projective_part_dims_local(a, cov.verts));
    cov.map = QMat::Zero(m.total_dim(), cov.proj.total_dim());
    int copy = 0;
    for (int v = 0; v < a.vertices(); ++v) {
        const int mv = t.vertex_dim(v);
        if (mv == 0) continue;
        QMat pv = proj.block(t.block_offset(v), m.block_offset(v), mv, m.vertex_dim(v));
        auto rinv = solve_matrix(pv, QMat::Identity(mv, mv));
        assert(rinv && "top projection must be onto");
        // generators x_i in the vertex v component of m; the coordinate of
        // copy i at a path p : v -> w maps to act(p) x_i, and one action
        // matrix serves every copy
        for (int w = 0; w < a.vertices(); ++w) {
            const auto& paths = a.paths_from_to(v, w);
            for (size_t pi = 0; pi < paths.size(); ++pi) {
                QMat pa = m.path_action(a.basis[static_cast<size_t>(paths[pi])]);
                for (int i = 0; i < mv; ++i) {
                    cov.map.col(off[static_cast<size_t>(copy + i)][static_cast<size_t>(w)] +
                                static_cast<int>(pi))
                        .segment(m.block_offset(w), m.vertex_dim(w)) = pa * rinv->col(i);
                }
            }
        }
        copy += mv;
    }
    assert(rank_of(cov.map) == m.total_dim() && "cover must be onto");
    return cov;
}

ProjMap minimal_presentation(const Representation& m) {
    const Algebra& a = *m.alg;
    Cover c0 = projective_cover(m);
    QMat incl;
    QMat kcols = kernel_basis(c0.map);
    Representation k = sub_representation(c0.proj, kcols, &incl);
    Cover c1 = projective_cover(k);
    QMat d_rep = incl * c1.map;  // rep(P1) -> rep(P0)

    ProjMap d;
    d.alg = &a;
    d.src = c1.verts;
    d.dst = c0.verts;
    d.elems.assign(d.src.size(), std::vector<QVec>(d.dst.size(), QVec::Zero(a.dim())));

    auto src_off = part_vertex_offsets(projective_part_dims_local(a, d.src));
    auto dst_off = part_vertex_offsets(projective_part_dims_local(a, d.dst));
    for (size_t c = 0; c < d.src.size(); ++c) {
        const int va = d.src[c];
        // column of the unit coordinate e_{va} of copy c
        int unit_col = -1;
        {
            const auto& paths = a.paths_from_to(va, va);
            for (size_t pi = 0; pi < paths.size(); ++pi) {
                if (a.basis[static_cast<size_t>(paths[pi])].length() == 0) {
                    unit_col = src_off[c][static_cast<size_t>(va)] + static_cast<int>(pi);
                }
            }
        }
        assert(unit_col >= 0);
        QVec img = d_rep.col(unit_col);
        for (size_t r = 0; r < d.dst.size(); ++r) {
            const int vb = d.dst[r];
            int total = static_cast<int>(a.paths_from(vb).size());
            QVec coords = QVec::Zero(total);
            int pos = 0;
            for (int w = 0; w < a.vertices(); ++w) {
                const int nb = static_cast<int>(a.paths_from_to(vb, w).size());
                for (int i = 0; i < nb; ++i) {
                    coords(pos + i) = img(dst_off[r][static_cast<size_t>(w)] + i);
                }
                pos += nb;
            }
            d.elems[c][r] = projective_coords_to_element(a, vb, coords);
        }
    }
    return d;
}

Representation cokernel_of(const ProjMap& d) {
    Representation p0 = d.dst_rep();
    return quotient_representation(p0, d.realize());
}

IVec g_vector_of(const Representation& m) { return minimal_presentation(m).g_vector(); }

Representation tau_of(const Representation& m, const Algebra& aop) {
    return tau_from_presentation(minimal_presentation(m), aop);
}

Representation tau_from_presentation(const ProjMap& d, const Algebra& aop) {
    const Algebra& a = *d.alg;
    ProjMap dt;
    dt.alg = &aop;
    dt.src = d.dst;
    dt.dst = d.src;
    dt.elems.assign(dt.src.size(), std::vector<QVec>(dt.dst.size(), QVec::Zero(aop.dim())));
    for (size_t c = 0; c < d.src.size(); ++c) {
        for (size_t r = 0; r < d.dst.size(); ++r) {
            dt.elems[r][c] = op_element(a, aop, d.elems[c][r]);
        }
    }
    Representation tr = cokernel_of(dt);
    return dual_rep(tr, a);
}

Representation dual_rep(const Representation& n, const Algebra& a) {
    Representation r;
    r.alg = &a;
    r.dims = n.dims;
    r.arrow_maps.resize(n.arrow_maps.size());
    for (size_t i = 0; i < n.arrow_maps.size(); ++i) {
        r.arrow_maps[i] = n.arrow_maps[i].transpose();
    }
    return r;
}

bool ModuleFingerprint::operator<(const ModuleFingerprint& o) const {
    if (dimv != o.dimv) return dimv < o.dimv;
    if (end_dim != o.end_dim) return end_dim < o.end_dim;
    if (hom_to_proj != o.hom_to_proj) return hom_to_proj < o.hom_to_proj;
    return gvec < o.gvec;
}

std::string ModuleFingerprint::to_string() const {
    std::ostringstream os;
    os << "d";
    for (long x : dimv) os << ":" << x;
    os << ";e" << end_dim << ";h";
    for (long x : hom_to_proj) os << ":" << x;
    os << ";g";
    for (long x : gvec) os << ":" << x;
    return os.str();
}

ModuleFingerprint fingerprint_of(const Representation& m) {
    return fingerprint_of(m, minimal_presentation(m));
}

ModuleFingerprint fingerprint_of(const Representation& m, const ProjMap& pres) {
    const Algebra& a = *m.alg;
    ModuleFingerprint f;
    f.dimv = m.dimension_vector();
    f.end_dim = hom_dim(m, m);
    for (int v = 0; v < a.vertices(); ++v) {
        Representation p = projective_rep(a, v);
        f.hom_to_proj.push_back(hom_dim(m, p));
    }
    f.gvec = pres.g_vector();
    return f;
}

}  // namespace taufan
