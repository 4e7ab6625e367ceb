#include "taufan/representation.hpp"

#include "taufan/errors.hpp"
#include "taufan/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace taufan {

int Representation::total_dim() const {
    int d = 0;
    for (int x : dims) d += x;
    return d;
}

IVec Representation::dimension_vector() const {
    IVec v(dims.size());
    for (size_t i = 0; i < dims.size(); ++i) v[i] = dims[i];
    return v;
}

int Representation::block_offset(int v) const {
    int off = 0;
    for (int i = 0; i < v; ++i) off += dims[static_cast<size_t>(i)];
    return off;
}

QMat Representation::path_action(const PathWord& w) const {
    QMat m = QMat::Identity(vertex_dim(w.source), vertex_dim(w.source));
    for (int a : w.arrows) m = arrow_map(a) * m;
    return m;
}

QMat Representation::element_action(const QVec& x) const {
    const int D = total_dim();
    QMat m = QMat::Zero(D, D);
    for (int i = 0; i < alg->dim(); ++i) {
        if (x(i) == 0) continue;
        const PathWord& w = alg->basis[static_cast<size_t>(i)];
        QMat pa = path_action(w);
        m.block(block_offset(w.target), block_offset(w.source), pa.rows(), pa.cols()) += x(i) * pa;
    }
    return m;
}

bool Representation::satisfies_relations() const {
    const Quiver& q = alg->pres.quiver;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const QMat& m = arrow_map(static_cast<int>(a));
        if (m.rows() != vertex_dim(q.arrows[a].to) || m.cols() != vertex_dim(q.arrows[a].from)) {
            return false;
        }
    }
    for (const Relation& rel : alg->pres.relations) {
        QMat sum;
        bool first = true;
        for (const RelationTerm& t : rel.terms) {
            if (t.coeff == 0) continue;
            PathWord w;
            w.source = q.arrows[static_cast<size_t>(t.arrows.front())].from;
            w.target = q.arrows[static_cast<size_t>(t.arrows.back())].to;
            w.arrows = t.arrows;
            QMat pa = t.coeff * path_action(w);
            if (first) { sum = pa; first = false; }
            else sum += pa;
        }
        if (!first && !is_zero_mat(sum)) return false;
    }
    return true;
}

Representation zero_rep(const Algebra& a) {
    Representation r;
    r.alg = &a;
    r.dims.assign(static_cast<size_t>(a.vertices()), 0);
    for (size_t i = 0; i < a.pres.quiver.arrows.size(); ++i) {
        const Arrow& ar = a.pres.quiver.arrows[i];
        r.arrow_maps.push_back(QMat::Zero(r.dims[static_cast<size_t>(ar.to)],
                                          r.dims[static_cast<size_t>(ar.from)]));
    }
    return r;
}

Representation simple_rep(const Algebra& a, int v) {
    Representation r = zero_rep(a);
    r.dims[static_cast<size_t>(v)] = 1;
    for (size_t i = 0; i < a.pres.quiver.arrows.size(); ++i) {
        const Arrow& ar = a.pres.quiver.arrows[i];
        r.arrow_maps[i] = QMat::Zero(r.dims[static_cast<size_t>(ar.to)],
                                     r.dims[static_cast<size_t>(ar.from)]);
    }
    return r;
}

Representation projective_rep(const Algebra& a, int v) {
    Representation r;
    r.alg = &a;
    const int n = a.vertices();
    r.dims.assign(static_cast<size_t>(n), 0);
    // coordinates at vertex w are the paths v -> w, in algebra basis order
    std::vector<std::vector<int>> coords(static_cast<size_t>(n));
    for (int w = 0; w < n; ++w) {
        coords[static_cast<size_t>(w)] = a.paths_from_to(v, w);
        r.dims[static_cast<size_t>(w)] = static_cast<int>(coords[static_cast<size_t>(w)].size());
    }
    for (size_t ai = 0; ai < a.pres.quiver.arrows.size(); ++ai) {
        const Arrow& ar = a.pres.quiver.arrows[ai];
        const auto& src = coords[static_cast<size_t>(ar.from)];
        const auto& tgt = coords[static_cast<size_t>(ar.to)];
        QMat m = QMat::Zero(static_cast<Eigen::Index>(tgt.size()),
                            static_cast<Eigen::Index>(src.size()));
        const int arrow_b = a.arrow_index(static_cast<int>(ai));
        for (size_t c = 0; c < src.size(); ++c) {
            for (const auto& [k, coeff] : a.table(arrow_b, src[c])) {
                auto it = std::find(tgt.begin(), tgt.end(), k);
                assert(it != tgt.end());
                m(static_cast<Eigen::Index>(it - tgt.begin()), static_cast<Eigen::Index>(c)) = coeff;
            }
        }
        r.arrow_maps.push_back(m);
    }
    return r;
}

Representation direct_sum(const std::vector<Representation>& parts) {
    assert(!parts.empty());
    const Algebra& a = *parts[0].alg;
    Representation r = zero_rep(a);
    for (const Representation& p : parts) {
        assert(p.alg == &a);
        for (size_t v = 0; v < r.dims.size(); ++v) r.dims[v] += p.dims[v];
    }
    for (size_t ai = 0; ai < a.pres.quiver.arrows.size(); ++ai) {
        const Arrow& ar = a.pres.quiver.arrows[ai];
        QMat m = QMat::Zero(r.dims[static_cast<size_t>(ar.to)], r.dims[static_cast<size_t>(ar.from)]);
        Eigen::Index ro = 0, co = 0;
        for (const Representation& p : parts) {
            const QMat& pm = p.arrow_maps[ai];
            m.block(ro, co, pm.rows(), pm.cols()) = pm;
            ro += pm.rows();
            co += pm.cols();
        }
        r.arrow_maps[ai] = m;
    }
    return r;
}

Representation direct_sum_pow(const Representation& m, int k) {
    if (k == 0) return zero_rep(*m.alg);
    return direct_sum(std::vector<Representation>(static_cast<size_t>(k), m));
}

namespace {

// split concatenated columns per vertex block and close under the arrow
// maps; returns one independent spanning matrix per vertex
std::vector<QMat> closed_vertex_spans(const Representation& m, const QMat& span_cols) {
    const Quiver& q = m.alg->pres.quiver;
    const int n = static_cast<int>(m.dims.size());
    std::vector<QMat> spans(static_cast<size_t>(n));
    std::vector<SpanOracle> oracles;
    oracles.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        spans[static_cast<size_t>(v)] = QMat(m.vertex_dim(v), 0);
        oracles.emplace_back(m.vertex_dim(v));
    }

    std::vector<std::pair<int, QVec>> queue;
    auto push = [&](int v, const QVec& x) {
        if (!oracles[static_cast<size_t>(v)].add(x)) return;
        QMat& s = spans[static_cast<size_t>(v)];
        s.conservativeResize(Eigen::NoChange, s.cols() + 1);
        s.col(s.cols() - 1) = x;
        queue.emplace_back(v, x);
    };
    for (Eigen::Index c = 0; c < span_cols.cols(); ++c) {
        for (int v = 0; v < n; ++v) {
            push(v, span_cols.col(c).segment(m.block_offset(v), m.vertex_dim(v)));
        }
    }
    while (!queue.empty()) {
        auto [v, x] = queue.back();
        queue.pop_back();
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            if (q.arrows[a].from != v) continue;
            push(q.arrows[a].to, m.arrow_maps[a] * x);
        }
    }
    return spans;
}

}  // namespace

Representation sub_representation(const Representation& m, const QMat& span_cols,
                                  QMat* inclusion) {
    const Quiver& q = m.alg->pres.quiver;
    std::vector<QMat> spans = closed_vertex_spans(m, span_cols);
    Representation r;
    r.alg = m.alg;
    r.dims.resize(m.dims.size());
    for (size_t v = 0; v < m.dims.size(); ++v) {
        r.dims[v] = static_cast<int>(spans[v].cols());
    }
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const QMat& src = spans[static_cast<size_t>(q.arrows[a].from)];
        const QMat& tgt = spans[static_cast<size_t>(q.arrows[a].to)];
        auto x = solve_matrix(tgt, m.arrow_maps[a] * src);
        assert(x && "closed span must be arrow stable");
        r.arrow_maps.push_back(*x);
    }
    if (inclusion) {
        QMat inc = QMat::Zero(m.total_dim(), r.total_dim());
        for (size_t v = 0; v < m.dims.size(); ++v) {
            inc.block(m.block_offset(static_cast<int>(v)), r.block_offset(static_cast<int>(v)),
                      spans[v].rows(), spans[v].cols()) = spans[v];
        }
        *inclusion = inc;
    }
    return r;
}

Representation quotient_representation(const Representation& m, const QMat& span_cols,
                                       QMat* projection) {
    const Quiver& q = m.alg->pres.quiver;
    std::vector<QMat> spans = closed_vertex_spans(m, span_cols);
    // per vertex, rows annihilating the span give coordinates on the quotient
    std::vector<QMat> projs(spans.size());
    for (size_t v = 0; v < spans.size(); ++v) {
        projs[v] = kernel_basis(spans[v].transpose()).transpose();
    }
    Representation r;
    r.alg = m.alg;
    r.dims.resize(m.dims.size());
    for (size_t v = 0; v < m.dims.size(); ++v) r.dims[v] = static_cast<int>(projs[v].rows());
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const QMat& ps = projs[static_cast<size_t>(q.arrows[a].from)];
        const QMat& pt = projs[static_cast<size_t>(q.arrows[a].to)];
        // solve X ps = pt * arrow_map, which is solvable because the span is
        // arrow stable
        auto xt = solve_matrix(ps.transpose(), (pt * m.arrow_maps[a]).transpose());
        assert(xt && "quotient arrow map must factor through the projection");
        r.arrow_maps.push_back(xt->transpose());
    }
    if (projection) {
        QMat pr = QMat::Zero(r.total_dim(), m.total_dim());
        for (size_t v = 0; v < m.dims.size(); ++v) {
            pr.block(r.block_offset(static_cast<int>(v)), m.block_offset(static_cast<int>(v)),
                     projs[v].rows(), projs[v].cols()) = projs[v];
        }
        *projection = pr;
    }
    return r;
}

std::string rep_to_string(const Representation& m) {
    std::ostringstream os;
    os << "(";
    for (size_t v = 0; v < m.dims.size(); ++v) {
        if (v) os << ",";
        os << m.dims[v];
    }
    os << ")";
    return os.str();
}

}  // namespace taufan
