#include "taufan/algebra.hpp"

#include "taufan/errors.hpp"
#include "taufan/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace taufan {

std::string path_to_string(const PathWord& w, const Quiver& q) {
    if (w.arrows.empty()) return "e" + std::to_string(w.source + 1);
    std::string s;
    for (size_t i = 0; i < w.arrows.size(); ++i) {
        if (i) s += "*";
        s += q.arrows[static_cast<size_t>(w.arrows[i])].name;
    }
    return s;
}

namespace {

using WordKey = std::pair<int, std::vector<int>>;  // (source, arrows)

WordKey key_of(const PathWord& w) { return {w.source, w.arrows}; }

// elimination order: longer first, then lexicographically larger first,
// then larger source; the surviving residue basis is as short and as
// lexicographically small as possible
bool elim_before(const PathWord& a, const PathWord& b) {
    if (a.length() != b.length()) return a.length() > b.length();
    if (a.arrows != b.arrows) return a.arrows > b.arrows;
    return a.source > b.source;
}

bool basis_before(const PathWord& a, const PathWord& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    return a.source < b.source;
}

void validate_presentation(const AlgebraPresentation& pres) {
    const Quiver& q = pres.quiver;
    if (q.vertices < 1) throw NotAdmissible("quiver needs at least one vertex");
    if (pres.length_bound < 2) throw NotAdmissible("length bound must be at least 2");
    for (const Arrow& a : q.arrows) {
        if (a.from < 0 || a.from >= q.vertices || a.to < 0 || a.to >= q.vertices) {
            throw NotAdmissible("arrow " + a.name + " has endpoints outside the vertex range");
        }
    }
    for (const Relation& rel : pres.relations) {
        int src = -1, tgt = -1;
        for (const RelationTerm& t : rel.terms) {
            if (t.coeff == 0) continue;
            if (t.arrows.size() < 2) {
                throw NotAdmissible("relation term of length < 2");
            }
            for (int a : t.arrows) {
                if (a < 0 || a >= static_cast<int>(q.arrows.size())) {
                    throw NotAdmissible("relation references an unknown arrow");
                }
            }
            for (size_t i = 0; i + 1 < t.arrows.size(); ++i) {
                if (q.arrows[static_cast<size_t>(t.arrows[i])].to !=
                    q.arrows[static_cast<size_t>(t.arrows[i + 1])].from) {
                    throw NotAdmissible("relation term is not a composable path");
                }
            }
            int s = q.arrows[static_cast<size_t>(t.arrows.front())].from;
            int e = q.arrows[static_cast<size_t>(t.arrows.back())].to;
            if (src < 0) { src = s; tgt = e; }
            else if (s != src || e != tgt) {
                throw InconsistentRelation("relation mixes non-parallel paths");
            }
        }
    }
}

}  // namespace

QVec Algebra::multiply(const QVec& x, const QVec& y) const {
    QVec r = QVec::Zero(dim());
    for (int i = 0; i < dim(); ++i) {
        if (x(i) == 0) continue;
        for (int j = 0; j < dim(); ++j) {
            if (y(j) == 0) continue;
            for (const auto& [k, c] : mult_[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
                r(k) += x(i) * y(j) * c;
            }
        }
    }
    return r;
}

QVec Algebra::unit_element() const {
    QVec r = QVec::Zero(dim());
    for (int v = 0; v < vertices(); ++v) r(unit_index(v)) = 1;
    return r;
}

QVec Algebra::basis_element(int i) const {
    QVec r = QVec::Zero(dim());
    r(i) = 1;
    return r;
}

const std::vector<int>& Algebra::paths_from_to(int source, int target) const {
    return by_src_tgt_[static_cast<size_t>(source)][static_cast<size_t>(target)];
}

const std::vector<int>& Algebra::paths_from(int source) const {
    return by_src_[static_cast<size_t>(source)];
}

Algebra build_algebra(const AlgebraPresentation& pres) {
    validate_presentation(pres);
    const Quiver& q = pres.quiver;
    const int n = q.vertices;
    const int bound = pres.length_bound;

    int max_rel_len = 0;
    for (const Relation& rel : pres.relations) {
        for (const RelationTerm& t : rel.terms) {
            if (t.coeff != 0) max_rel_len = std::max(max_rel_len, static_cast<int>(t.arrows.size()));
        }
    }
    const int closure_len = bound + max_rel_len;

    // enumerate all paths up to the closure length
    std::vector<PathWord> words;
    std::map<WordKey, int> index;
    for (int v = 0; v < n; ++v) {
        words.push_back(PathWord{v, v, {}});
        index[key_of(words.back())] = static_cast<int>(words.size()) - 1;
    }
    size_t level_begin = 0;
    for (int len = 1; len <= closure_len; ++len) {
        size_t level_end = words.size();
        for (size_t i = level_begin; i < level_end; ++i) {
            PathWord w = words[i];
            for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
                if (q.arrows[static_cast<size_t>(a)].from != w.target) continue;
                PathWord nw = w;
                nw.arrows.push_back(a);
                nw.target = q.arrows[static_cast<size_t>(a)].to;
                words.push_back(nw);
                index[key_of(nw)] = static_cast<int>(words.size()) - 1;
            }
        }
        level_begin = level_end;
        if (words.size() > 200000) {
            throw Error("path space exceeds the desk-scale limit before reduction");
        }
    }

    // ideal rows: every x * relation * y whose longest term fits the closure
    const int ncols = static_cast<int>(words.size());
    std::vector<int> order(static_cast<size_t>(ncols));
    for (int i = 0; i < ncols; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return elim_before(words[static_cast<size_t>(a)], words[static_cast<size_t>(b)]);
    });
    std::vector<int> pos(static_cast<size_t>(ncols));  // column -> elimination position
    for (int k = 0; k < ncols; ++k) pos[static_cast<size_t>(order[static_cast<size_t>(k)])] = k;

    std::vector<QVec> rows;
    for (const Relation& rel : pres.relations) {
        int rsrc = -1, rtgt = -1, rlen = 0;
        for (const RelationTerm& t : rel.terms) {
            if (t.coeff == 0) continue;
            rsrc = q.arrows[static_cast<size_t>(t.arrows.front())].from;
            rtgt = q.arrows[static_cast<size_t>(t.arrows.back())].to;
            rlen = std::max(rlen, static_cast<int>(t.arrows.size()));
        }
        if (rsrc < 0) continue;
        for (const PathWord& x : words) {
            if (x.target != rsrc) continue;
            for (const PathWord& y : words) {
                if (y.source != rtgt) continue;
                if (x.length() + rlen + y.length() > closure_len) continue;
                QVec row = QVec::Zero(ncols);
                for (const RelationTerm& t : rel.terms) {
                    if (t.coeff == 0) continue;
                    PathWord w;
                    w.source = x.source;
                    w.target = y.target;
                    w.arrows = x.arrows;
                    w.arrows.insert(w.arrows.end(), t.arrows.begin(), t.arrows.end());
                    w.arrows.insert(w.arrows.end(), y.arrows.begin(), y.arrows.end());
                    auto it = index.find(key_of(w));
                    assert(it != index.end());
                    row(pos[static_cast<size_t>(it->second)]) += t.coeff;
                }
                rows.push_back(row);
            }
        }
    }

    // reduce the stacked rows; pivots are the reducible words
    QMat mat(static_cast<Eigen::Index>(rows.size()), ncols);
    for (size_t r = 0; r < rows.size(); ++r) mat.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
    std::vector<int> pivots;
    const int rk = rref(mat, &pivots);

    std::vector<int> pivot_row_of(static_cast<size_t>(ncols), -1);
    for (int r = 0; r < rk; ++r) {
        pivot_row_of[static_cast<size_t>(order[static_cast<size_t>(pivots[static_cast<size_t>(r)])])] = r;
    }

    // finite-dimensionality certificate: every path of the bound length
    // reduces to zero
    for (int c = 0; c < ncols; ++c) {
        const PathWord& w = words[static_cast<size_t>(c)];
        if (w.length() != bound) continue;
        int pr = pivot_row_of[static_cast<size_t>(c)];
        bool vanishes = pr >= 0;
        if (pr >= 0) {
            for (int k = pos[static_cast<size_t>(c)] + 1; k < ncols; ++k) {
                if (mat(pr, k) != 0) { vanishes = false; break; }
            }
        }
        if (!vanishes) {
            throw NotFiniteDimensional(
                "path " + path_to_string(w, q) + " of length " + std::to_string(bound) +
                    " does not reduce to zero; the quotient is not certified finite dimensional",
                bound);
        }
    }

    Algebra alg;
    alg.pres = pres;
    std::vector<int> basis_cols;
    for (int c = 0; c < ncols; ++c) {
        const PathWord& w = words[static_cast<size_t>(c)];
        if (w.length() >= bound) continue;
        if (pivot_row_of[static_cast<size_t>(c)] >= 0) continue;
        basis_cols.push_back(c);
    }
    std::sort(basis_cols.begin(), basis_cols.end(), [&](int a, int b) {
        return basis_before(words[static_cast<size_t>(a)], words[static_cast<size_t>(b)]);
    });
    std::map<int, int> col_to_basis;
    for (size_t i = 0; i < basis_cols.size(); ++i) {
        alg.basis.push_back(words[static_cast<size_t>(basis_cols[i])]);
        col_to_basis[basis_cols[i]] = static_cast<int>(i);
    }
    const int d = alg.dim();
    for (int v = 0; v < n; ++v) {
        assert(alg.basis[static_cast<size_t>(v)].length() == 0 &&
               alg.basis[static_cast<size_t>(v)].source == v &&
               "trivial paths must survive an admissible quotient");
    }

    // normal form of any enumerated word of length < bound, over the basis
    auto normal_form = [&](int col) {
        std::vector<std::pair<int, Rat>> nf;
        int pr = pivot_row_of[static_cast<size_t>(col)];
        if (pr < 0) {
            nf.emplace_back(col_to_basis.at(col), Rat(1));
            return nf;
        }
        for (int k = pos[static_cast<size_t>(col)] + 1; k < ncols; ++k) {
            if (mat(pr, k) == 0) continue;
            int tail_col = order[static_cast<size_t>(k)];
            auto it = col_to_basis.find(tail_col);
            // tail entries of a short pivot always sit on short residue
            // columns by the elimination order
            assert(it != col_to_basis.end());
            nf.emplace_back(it->second, Rat(-mat(pr, k)));
        }
        return nf;
    };

    alg.arrow_basis_.resize(q.arrows.size());
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        PathWord w{q.arrows[a].from, q.arrows[a].to, {static_cast<int>(a)}};
        auto it = index.find(key_of(w));
        assert(it != index.end());
        auto nf = normal_form(it->second);
        assert(nf.size() == 1 && nf[0].second == 1 &&
               "arrows must survive an admissible quotient");
        alg.arrow_basis_[a] = nf[0].first;
    }

    alg.mult_.assign(static_cast<size_t>(d),
                     std::vector<std::vector<std::pair<int, Rat>>>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const PathWord& x = alg.basis[static_cast<size_t>(i)];
            const PathWord& y = alg.basis[static_cast<size_t>(j)];
            if (y.target != x.source) continue;  // x * y = "x after y"
            if (x.length() + y.length() >= bound) continue;
            PathWord w;
            w.source = y.source;
            w.target = x.target;
            w.arrows = y.arrows;
            w.arrows.insert(w.arrows.end(), x.arrows.begin(), x.arrows.end());
            auto it = index.find(key_of(w));
            assert(it != index.end());
            alg.mult_[static_cast<size_t>(i)][static_cast<size_t>(j)] = normal_form(it->second);
        }
    }

    alg.by_src_tgt_.assign(static_cast<size_t>(n), std::vector<std::vector<int>>(static_cast<size_t>(n)));
    alg.by_src_.assign(static_cast<size_t>(n), {});
    for (int i = 0; i < d; ++i) {
        const PathWord& w = alg.basis[static_cast<size_t>(i)];
        alg.by_src_tgt_[static_cast<size_t>(w.source)][static_cast<size_t>(w.target)].push_back(i);
        alg.by_src_[static_cast<size_t>(w.source)].push_back(i);
    }

    // the multiplication table must be associative; anything else means the
    // truncated closure missed ideal elements
    for (int i = 0; i < d; ++i) {
        QVec bi = alg.basis_element(i);
        for (int j = 0; j < d; ++j) {
            QVec bj = alg.basis_element(j);
            QVec ij = alg.multiply(bi, bj);
            for (int k = 0; k < d; ++k) {
                QVec bk = alg.basis_element(k);
                QVec left = alg.multiply(ij, bk);
                QVec right = alg.multiply(bi, alg.multiply(bj, bk));
                if (!is_zero_vec(left - right)) {
                    throw Error("multiplication table is not associative on basis triple (" +
                                std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + ")");
                }
            }
        }
    }
    return alg;
}

Algebra build_opposite(const Algebra& a) {
    AlgebraPresentation p;
    p.name = a.pres.name + "^op";
    p.length_bound = a.pres.length_bound;
    p.quiver.vertices = a.pres.quiver.vertices;
    for (const Arrow& ar : a.pres.quiver.arrows) {
        p.quiver.arrows.push_back(Arrow{ar.name, ar.to, ar.from});
    }
    for (const Relation& rel : a.pres.relations) {
        Relation r;
        for (const RelationTerm& t : rel.terms) {
            RelationTerm nt;
            nt.coeff = t.coeff;
            nt.arrows.assign(t.arrows.rbegin(), t.arrows.rend());
            r.terms.push_back(nt);
        }
        p.relations.push_back(r);
    }
    Algebra op = build_algebra(p);
    assert(op.dim() == a.dim());
    return op;
}

QVec op_element(const Algebra& a, const Algebra& aop, const QVec& x) {
    QVec r = QVec::Zero(aop.dim());
    for (int i = 0; i < a.dim(); ++i) {
        if (x(i) == 0) continue;
        const PathWord& w = a.basis[static_cast<size_t>(i)];
        // fold the reversed word through the opposite multiplication
        QVec e = aop.basis_element(aop.unit_index(w.target));
        for (auto it = w.arrows.rbegin(); it != w.arrows.rend(); ++it) {
            e = aop.multiply(aop.basis_element(aop.arrow_index(*it)), e);
        }
        r += x(i) * e;
    }
    return r;
}

}  // namespace taufan
