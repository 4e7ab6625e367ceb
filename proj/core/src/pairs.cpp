#include "taufan/pairs.hpp"

#include "taufan/errors.hpp"
#include "taufan/linalg.hpp"

#include <algorithm>

namespace taufan {

ProjMap compose_elem(const ProjMap& d1, const ProjMap& d2) {
    if (d1.alg != d2.alg || d1.dst != d2.src) {
        throw Error("compose_elem: maps are not composable");
    }
    const Algebra& a = *d1.alg;
    ProjMap out;
    out.alg = d1.alg;
    out.src = d1.src;
    out.dst = d2.dst;
    out.elems.assign(out.src.size(), std::vector<QVec>(out.dst.size(), QVec::Zero(a.dim())));
    for (size_t c = 0; c < d1.src.size(); ++c) {
        for (size_t s = 0; s < d2.dst.size(); ++s) {
            QVec acc = QVec::Zero(a.dim());
            for (size_t r = 0; r < d1.dst.size(); ++r) {
                acc += a.multiply(d1.elems[c][r], d2.elems[r][s]);
            }
            out.elems[c][s] = acc;
        }
    }
    return out;
}

ProjMap add_elem(const ProjMap& a, const ProjMap& b) {
    if (a.alg != b.alg || a.src != b.src || a.dst != b.dst) {
        throw Error("add_elem: shapes differ");
    }
    ProjMap out = a;
    for (size_t c = 0; c < a.src.size(); ++c) {
        for (size_t r = 0; r < a.dst.size(); ++r) out.elems[c][r] += b.elems[c][r];
    }
    return out;
}

bool elem_is_zero(const ProjMap& a) {
    for (const auto& row : a.elems) {
        for (const auto& e : row) {
            if (!is_zero_vec(e)) return false;
        }
    }
    return true;
}

QVec ElemSpace::pack(const ProjMap& m) const {
    QVec v = QVec::Zero(dim);
    int pos = 0;
    for (size_t c = 0; c < src.size(); ++c) {
        for (size_t r = 0; r < dst.size(); ++r) {
            for (int id : paths[c][r]) v(pos++) = m.elems[c][r](id);
        }
    }
    return v;
}

ProjMap ElemSpace::unpack(const QVec& v) const {
    ProjMap m;
    m.alg = alg;
    m.src = src;
    m.dst = dst;
    m.elems.assign(src.size(), std::vector<QVec>(dst.size(), QVec::Zero(alg->dim())));
    int pos = 0;
    for (size_t c = 0; c < src.size(); ++c) {
        for (size_t r = 0; r < dst.size(); ++r) {
            for (int id : paths[c][r]) m.elems[c][r](id) = v(pos++);
        }
    }
    return m;
}

ElemSpace elem_space(const Algebra& a, std::vector<int> src, std::vector<int> dst) {
    ElemSpace s;
    s.alg = &a;
    s.src = std::move(src);
    s.dst = std::move(dst);
    s.paths.assign(s.src.size(), std::vector<std::vector<int>>(s.dst.size()));
    s.offset.assign(s.src.size(), std::vector<int>(s.dst.size(), 0));
    s.dim = 0;
    for (size_t c = 0; c < s.src.size(); ++c) {
        for (size_t r = 0; r < s.dst.size(); ++r) {
            // Hom(P(src[c]), P(dst[r])) has basis the paths dst[r] -> src[c]
            s.paths[c][r] = a.paths_from_to(s.dst[r], s.src[c]);
            s.offset[c][r] = s.dim;
            s.dim += static_cast<int>(s.paths[c][r].size());
        }
    }
    return s;
}

SparseMat precompose_matrix(const ElemSpace& in, const ElemSpace& out, const ProjMap& y) {
    if (in.alg != y.alg || in.dst != y.src || out.src != in.src || out.dst != y.dst) {
        throw Error("precompose_matrix: shape mismatch");
    }
    const Algebra& a = *in.alg;
    SparseMat m = sparse_zero(out.dim, in.dim);
    QVec unit = QVec::Zero(a.dim());
    int j = 0;
    for (size_t c = 0; c < in.src.size(); ++c) {
        for (size_t r = 0; r < in.dst.size(); ++r) {
            for (int p : in.paths[c][r]) {
                // the unit map at (c, r) composed with y stays in row block c
                unit(p) = 1;
                for (size_t s = 0; s < y.dst.size(); ++s) {
                    if (is_zero_vec(y.elems[r][s])) continue;
                    QVec prod = a.multiply(unit, y.elems[r][s]);
                    int pos = out.offset[c][s];
                    for (int id : out.paths[c][s]) {
                        if (prod(id) != 0) m.row[static_cast<size_t>(pos)].emplace_back(j, prod(id));
                        ++pos;
                    }
                }
                unit(p) = 0;
                ++j;
            }
        }
    }
    return m;
}

SparseMat postcompose_matrix(const ElemSpace& in, const ElemSpace& out, const ProjMap& x) {
    if (in.alg != x.alg || in.src != x.dst || out.src != x.src || out.dst != in.dst) {
        throw Error("postcompose_matrix: shape mismatch");
    }
    const Algebra& a = *in.alg;
    SparseMat m = sparse_zero(out.dim, in.dim);
    QVec unit = QVec::Zero(a.dim());
    int j = 0;
    for (size_t c = 0; c < in.src.size(); ++c) {
        for (size_t r = 0; r < in.dst.size(); ++r) {
            for (int p : in.paths[c][r]) {
                // x composed with the unit map at (c, r) stays in column block r
                unit(p) = 1;
                for (size_t q = 0; q < x.src.size(); ++q) {
                    if (is_zero_vec(x.elems[q][c])) continue;
                    QVec prod = a.multiply(x.elems[q][c], unit);
                    int pos = out.offset[q][r];
                    for (int id : out.paths[q][r]) {
                        if (prod(id) != 0) m.row[static_cast<size_t>(pos)].emplace_back(j, prod(id));
                        ++pos;
                    }
                }
                unit(p) = 0;
                ++j;
            }
        }
    }
    return m;
}

TwoTerm sum_complex(const std::vector<TwoTerm>& parts) {
    if (parts.empty()) throw Error("sum_complex: empty list");
    const Algebra& a = *parts.front().alg;
    TwoTerm out;
    out.alg = &a;
    for (const TwoTerm& p : parts) {
        out.src.insert(out.src.end(), p.src.begin(), p.src.end());
        out.dst.insert(out.dst.end(), p.dst.begin(), p.dst.end());
    }
    out.elems.assign(out.src.size(), std::vector<QVec>(out.dst.size(), QVec::Zero(a.dim())));
    size_t coff = 0, roff = 0;
    for (const TwoTerm& p : parts) {
        for (size_t c = 0; c < p.src.size(); ++c) {
            for (size_t r = 0; r < p.dst.size(); ++r) {
                out.elems[coff + c][roff + r] = p.elems[c][r];
            }
        }
        coff += p.src.size();
        roff += p.dst.size();
    }
    return out;
}

TwoTerm shifted_projective_complex(const Algebra& a, int v) {
    TwoTerm t;
    t.alg = &a;
    t.src = {v};
    t.dst = {};
    t.elems.assign(1, std::vector<QVec>());
    return t;
}

std::vector<std::pair<ProjMap, ProjMap>> hom_k_basis(const TwoTerm& x, const TwoTerm& y) {
    const Algebra& a = *x.alg;
    ElemSpace sm1 = elem_space(a, x.src, y.src);
    ElemSpace s0 = elem_space(a, x.dst, y.dst);
    ElemSpace tgt = elem_space(a, x.src, y.dst);
    ElemSpace sh = elem_space(a, x.dst, y.src);

    // chain maps: d_Y o f_{-1} = f_0 o d_X
    SparseMat b = precompose_matrix(sm1, tgt, y);
    SparseMat aa = postcompose_matrix(s0, tgt, x);
    sparse_negate(aa);
    QMat cm = sparse_kernel_basis(sparse_hstack(b, aa));  // columns: (f_{-1}; f_0)

    // null-homotopic chain maps: (h o d_X, d_Y o h)
    QMat hm = to_dense(sparse_vstack(postcompose_matrix(sh, sm1, x), precompose_matrix(sh, s0, y)));

    std::vector<int> keep = independent_columns(hstack(hm, cm));
    std::vector<std::pair<ProjMap, ProjMap>> out;
    for (int k : keep) {
        if (k < hm.cols()) continue;
        QVec col = cm.col(k - hm.cols());
        out.emplace_back(sm1.unpack(col.head(sm1.dim)), s0.unpack(col.tail(s0.dim)));
    }
    return out;
}

int hom_k_dim(const TwoTerm& x, const TwoTerm& y) {
    return static_cast<int>(hom_k_basis(x, y).size());
}

int hom_k_shift_dim(const TwoTerm& x, const TwoTerm& y) {
    const Algebra& a = *x.alg;
    // chain maps X -> Y[1] are arbitrary maps X_{-1} -> Y_0; the null ones
    // are spanned by f o d_X and d_Y o h
    ElemSpace g = elem_space(a, x.src, y.dst);
    ElemSpace sf = elem_space(a, x.dst, y.dst);
    ElemSpace sh = elem_space(a, x.src, y.src);
    SparseMat nf = postcompose_matrix(sf, g, x);
    SparseMat nh = precompose_matrix(sh, g, y);
    return g.dim - sparse_rank(sparse_hstack(nf, nh));
}

bool is_presilting(const std::vector<TwoTerm>& parts) {
    if (parts.empty()) return true;
    TwoTerm c = sum_complex(parts);
    return hom_k_shift_dim(c, c) == 0;
}

QVec invert_corner_unit(const Algebra& a, int v, const QVec& x) {
    const std::vector<int>& loops = a.paths_from_to(v, v);
    const int k = static_cast<int>(loops.size());
    QMat m(k, k);
    for (int j = 0; j < k; ++j) {
        QVec prod = a.multiply(x, a.basis_element(loops[static_cast<size_t>(j)]));
        for (int i = 0; i < k; ++i) m(i, j) = prod(loops[static_cast<size_t>(i)]);
    }
    QVec rhs = QVec::Zero(k);
    for (int i = 0; i < k; ++i) {
        if (loops[static_cast<size_t>(i)] == a.unit_index(v)) rhs(i) = 1;
    }
    auto sol = solve(m, rhs);
    if (!sol) throw Error("invert_corner_unit: element is not invertible");
    QVec y = QVec::Zero(a.dim());
    for (int i = 0; i < k; ++i) y(loops[static_cast<size_t>(i)]) = (*sol)(i);
    QVec unit = QVec::Zero(a.dim());
    unit(a.unit_index(v)) = 1;
    if (!is_zero_vec(a.multiply(x, y) - unit) || !is_zero_vec(a.multiply(y, x) - unit)) {
        throw Error("invert_corner_unit: inverse check failed");
    }
    return y;
}

namespace {

bool has_unit_coeff(const Algebra& a, const ProjMap& m, size_t c, size_t r) {
    if (m.src[c] != m.dst[r]) return false;
    return m.elems[c][r](a.unit_index(m.src[c])) != 0;
}

void erase_src(ProjMap& m, size_t c) {
    m.src.erase(m.src.begin() + static_cast<long>(c));
    m.elems.erase(m.elems.begin() + static_cast<long>(c));
}

void erase_dst(ProjMap& m, size_t r) {
    m.dst.erase(m.dst.begin() + static_cast<long>(r));
    for (auto& row : m.elems) row.erase(row.begin() + static_cast<long>(r));
}

}  // namespace

void minimize_three_term(ProjMap& a, ProjMap& b) {
    if (a.alg != b.alg || a.dst != b.src) throw Error("minimize_three_term: shape mismatch");
    const Algebra& alg = *b.alg;
    for (;;) {
        // corner units of b first: these strip contractible summands spanning
        // the middle and right terms
        bool found = false;
        for (size_t c0 = 0; c0 < b.src.size() && !found; ++c0) {
            for (size_t r0 = 0; r0 < b.dst.size() && !found; ++r0) {
                if (!has_unit_coeff(alg, b, c0, r0)) continue;
                found = true;
                const int v = b.src[c0];
                QVec xinv = invert_corner_unit(alg, v, b.elems[c0][r0]);
                // clear column r0 (basis change of the middle term)
                std::vector<QVec> u(b.src.size(), QVec::Zero(alg.dim()));
                for (size_t c = 0; c < b.src.size(); ++c) {
                    if (c == c0) continue;
                    u[c] = alg.multiply(b.elems[c][r0], xinv);
                    for (size_t r = 0; r < b.dst.size(); ++r) {
                        b.elems[c][r] -= alg.multiply(u[c], b.elems[c0][r]);
                    }
                }
                for (size_t q = 0; q < a.src.size(); ++q) {
                    QVec acc = a.elems[q][c0];
                    for (size_t c = 0; c < b.src.size(); ++c) {
                        if (c != c0) acc += alg.multiply(a.elems[q][c], u[c]);
                    }
                    a.elems[q][c0] = acc;
                }
                // clear row c0 (basis change of the right term)
                for (size_t r = 0; r < b.dst.size(); ++r) {
                    if (r == r0) continue;
                    QVec w = alg.multiply(xinv, b.elems[c0][r]);
                    for (size_t c = 0; c < b.src.size(); ++c) {
                        b.elems[c][r] -= alg.multiply(b.elems[c][r0], w);
                    }
                }
                for (size_t q = 0; q < a.src.size(); ++q) {
                    if (!is_zero_vec(a.elems[q][c0])) {
                        throw Error("minimize_three_term: left term did not clear");
                    }
                }
                erase_dst(a, c0);
                erase_src(b, c0);
                erase_dst(b, r0);
            }
        }
        if (found) continue;
        // then corner units of a: contractible summands spanning the left and
        // middle terms
        for (size_t q0 = 0; q0 < a.src.size() && !found; ++q0) {
            for (size_t c0 = 0; c0 < a.dst.size() && !found; ++c0) {
                if (!has_unit_coeff(alg, a, q0, c0)) continue;
                found = true;
                const int v = a.src[q0];
                QVec xinv = invert_corner_unit(alg, v, a.elems[q0][c0]);
                // clear column c0 (basis change of the left term)
                for (size_t q = 0; q < a.src.size(); ++q) {
                    if (q == q0) continue;
                    QVec uq = alg.multiply(a.elems[q][c0], xinv);
                    for (size_t c = 0; c < a.dst.size(); ++c) {
                        a.elems[q][c] -= alg.multiply(uq, a.elems[q0][c]);
                    }
                }
                // clear row q0 (basis change of the middle term)
                std::vector<QVec> w(a.dst.size(), QVec::Zero(alg.dim()));
                for (size_t c = 0; c < a.dst.size(); ++c) {
                    if (c == c0) continue;
                    w[c] = alg.multiply(xinv, a.elems[q0][c]);
                    for (size_t q = 0; q < a.src.size(); ++q) {
                        a.elems[q][c] -= alg.multiply(a.elems[q][c0], w[c]);
                    }
                }
                for (size_t r = 0; r < b.dst.size(); ++r) {
                    QVec acc = b.elems[c0][r];
                    for (size_t c = 0; c < a.dst.size(); ++c) {
                        if (c != c0) acc += alg.multiply(w[c], b.elems[c][r]);
                    }
                    if (!is_zero_vec(acc)) {
                        throw Error("minimize_three_term: right term did not clear");
                    }
                    b.elems[c0][r] = acc;
                }
                erase_src(a, q0);
                erase_dst(a, c0);
                erase_src(b, c0);
            }
        }
        if (!found) break;
    }
}

bool is_tau_rigid_pair(const Representation& m, const std::vector<int>& p_verts,
                       const Algebra& aop) {
    const Algebra& a = *m.alg;
    if (!m.is_zero()) {
        Representation tm = tau_of(m, aop);
        if (!tm.is_zero() && hom_dim(m, tm) != 0) return false;
    }
    for (int v : p_verts) {
        if (!m.is_zero() && hom_dim(projective_rep(a, v), m) != 0) return false;
    }
    return true;
}

PairParts extract_pair_parts(const TwoTerm& c) {
    const Algebra& a = *c.alg;
    PairParts out{cokernel_of(c), {}};
    if (c.src.empty()) return out;
    QMat k = kernel_basis(c.realize());
    auto off = projective_sum_offsets(a, c.src);
    for (int v = 0; v < a.vertices(); ++v) {
        // rows of the kernel at the generator coordinates of the copies of
        // P(v); their rank counts the split P(v)[1] summands
        std::vector<int> rows;
        for (size_t i = 0; i < c.src.size(); ++i) {
            if (c.src[i] != v) continue;
            const auto& loops = a.paths_from_to(v, v);
            int pos = -1;
            for (size_t j = 0; j < loops.size(); ++j) {
                if (loops[j] == a.unit_index(v)) pos = static_cast<int>(j);
            }
            rows.push_back(off[i][static_cast<size_t>(v)] + pos);
        }
        if (rows.empty()) continue;
        QMat g(static_cast<int>(rows.size()), k.cols());
        for (size_t i = 0; i < rows.size(); ++i) g.row(static_cast<long>(i)) = k.row(rows[i]);
        const int mult = rank_of(g);
        for (int t = 0; t < mult; ++t) out.shifted_verts.push_back(v);
    }
    return out;
}

}  // namespace taufan
