#include "taufan/linalg.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>

namespace taufan {

int rref(QMat& m, std::vector<int>* pivots) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index row = 0;
    std::vector<Eigen::Index> nz;  // nonzero columns of the pivot row
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = row; r < rows; ++r) {
            if (m(r, col) != 0) { piv = r; break; }
        }
        if (piv < 0) continue;
        if (piv != row) m.row(piv).swap(m.row(row));
        // rows at or below `row` are zero left of `col`, and rows above have
        // zeros in every pivot column, so updates only touch columns >= col
        nz.clear();
        const Rat p = m(row, col);
        for (Eigen::Index c = col; c < cols; ++c) {
            if (m(row, c) == 0) continue;
            if (p != 1) m(row, c) /= p;
            nz.push_back(c);
        }
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (r == row) continue;
            const Rat f = m(r, col);
            if (f == 0) continue;
            for (Eigen::Index c : nz) m(r, c) -= f * m(row, c);
        }
        if (pivots) pivots->push_back(static_cast<int>(col));
        ++row;
    }
    return static_cast<int>(row);
}

int rank_of(const QMat& m) {
    QMat c = m;
    return rref(c);
}

QMat kernel_basis(const QMat& m) {
    QMat r = m;
    std::vector<int> pivots;
    const int rk = rref(r, &pivots);
    const Eigen::Index cols = m.cols();
    std::vector<int> free_cols;
    {
        size_t p = 0;
        for (Eigen::Index c = 0; c < cols; ++c) {
            if (p < pivots.size() && pivots[p] == c) { ++p; continue; }
            free_cols.push_back(static_cast<int>(c));
        }
    }
    QMat k = QMat::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
    for (size_t j = 0; j < free_cols.size(); ++j) {
        k(free_cols[j], static_cast<Eigen::Index>(j)) = 1;
        for (int i = 0; i < rk; ++i) {
            k(pivots[static_cast<size_t>(i)], static_cast<Eigen::Index>(j)) =
                -r(i, free_cols[j]);
        }
    }
    return k;
}

std::optional<QVec> solve(const QMat& a, const QVec& b) {
    auto x = solve_matrix(a, b);
    if (!x) return std::nullopt;
    return QVec(x->col(0));
}

std::optional<QMat> solve_matrix(const QMat& a, const QMat& b) {
    QMat aug = hstack(a, b);
    std::vector<int> pivots;
    rref(aug, &pivots);
    const Eigen::Index n = a.cols();
    for (int p : pivots) {
        if (p >= n) return std::nullopt;  // pivot in the augmented block
    }
    QMat x = QMat::Zero(n, b.cols());
    for (size_t i = 0; i < pivots.size(); ++i) {
        x.row(pivots[i]) = aug.block(static_cast<Eigen::Index>(i), n, 1, b.cols());
    }
    return x;
}

Rat det(const QMat& m) {
    if (m.rows() != m.cols()) return Rat(0);
    QMat a = m;
    const Eigen::Index n = a.rows();
    Rat d(1);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = col; r < n; ++r) {
            if (a(r, col) != 0) { piv = r; break; }
        }
        if (piv < 0) return Rat(0);
        if (piv != col) { a.row(piv).swap(a.row(col)); d = -d; }
        d *= a(col, col);
        for (Eigen::Index r = col + 1; r < n; ++r) {
            if (a(r, col) != 0) a.row(r) -= (a(r, col) / a(col, col)) * a.row(col);
        }
    }
    return d;
}

std::optional<QMat> inverse(const QMat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    QMat id = QMat::Identity(m.rows(), m.cols());
    return solve_matrix(m, id);
}

QMat hstack(const QMat& a, const QMat& b) {
    QMat r(a.rows(), a.cols() + b.cols());
    r.leftCols(a.cols()) = a;
    r.rightCols(b.cols()) = b;
    return r;
}

QMat vstack(const QMat& a, const QMat& b) {
    QMat r(a.rows() + b.rows(), a.cols());
    r.topRows(a.rows()) = a;
    r.bottomRows(b.rows()) = b;
    return r;
}

std::vector<int> independent_columns(const QMat& m) {
    QMat c = m;
    std::vector<int> pivots;
    rref(c, &pivots);
    return pivots;
}

bool in_column_span(const QMat& a, const QVec& v) {
    return solve(a, v).has_value();
}

QVec SpanOracle::reduce(const QVec& v) const {
    QVec w = v;
    // rows are mutually reduced, so one pass in any order suffices
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rat c = w(lead_[i]);
        if (c == 0) continue;
        const QVec& row = rows_[i];
        for (Eigen::Index j = 0; j < dim_; ++j) {
            if (row(j) != 0) w(j) -= c * row(j);
        }
    }
    return w;
}

bool SpanOracle::add(const QVec& v) {
    QVec w = reduce(v);
    Eigen::Index lead = -1;
    for (Eigen::Index j = 0; j < dim_; ++j) {
        if (w(j) != 0) { lead = j; break; }
    }
    if (lead < 0) return false;
    const Rat p = w(lead);
    if (p != 1) {
        for (Eigen::Index j = lead; j < dim_; ++j) {
            if (w(j) != 0) w(j) /= p;
        }
    }
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rat c = rows_[i](lead);
        if (c == 0) continue;
        for (Eigen::Index j = 0; j < dim_; ++j) {
            if (w(j) != 0) rows_[i](j) -= c * w(j);
        }
    }
    rows_.push_back(std::move(w));
    lead_.push_back(lead);
    return true;
}

QVec primitive_integer_vector(const QVec& v) {
    Int l(1);
    for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm(l, denom(v(i)));
    Int g(0);
    for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, Int(numer(v(i)) * (l / denom(v(i)))));
    if (g == 0) return QVec::Zero(v.size());
    QVec r(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = v(i) * Rat(l) / Rat(g);
    return r;
}

bool is_zero_vec(const QVec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) != 0) return false;
    }
    return true;
}

bool is_zero_mat(const QMat& m) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (m(r, c) != 0) return false;
        }
    }
    return true;
}

bool same_mat(const QMat& a, const QMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return is_zero_mat(a - b);
}

SparseMat sparse_zero(int rows, int cols) {
    SparseMat m;
    m.rows = rows;
    m.cols = cols;
    m.row.resize(static_cast<size_t>(rows));
    return m;
}

void sparse_sort_rows(SparseMat& m) {
    for (SparseRow& r : m.row) {
        std::sort(r.begin(), r.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseRow merged;
        for (auto& e : r) {
            if (!merged.empty() && merged.back().first == e.first) {
                merged.back().second += e.second;
                if (merged.back().second == 0) merged.pop_back();
            } else if (e.second != 0) {
                merged.push_back(std::move(e));
            }
        }
        r = std::move(merged);
    }
}

QMat to_dense(const SparseMat& m) {
    QMat d = QMat::Zero(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r) {
        for (const auto& e : m.row[static_cast<size_t>(r)]) d(r, e.first) = e.second;
    }
    return d;
}

SparseMat sparse_hstack(const SparseMat& a, const SparseMat& b) {
    SparseMat m = sparse_zero(a.rows, a.cols + b.cols);
    for (int r = 0; r < a.rows; ++r) {
        m.row[static_cast<size_t>(r)] = a.row[static_cast<size_t>(r)];
        for (const auto& e : b.row[static_cast<size_t>(r)]) {
            m.row[static_cast<size_t>(r)].emplace_back(e.first + a.cols, e.second);
        }
    }
    return m;
}

SparseMat sparse_vstack(const SparseMat& a, const SparseMat& b) {
    SparseMat m = sparse_zero(a.rows + b.rows, a.cols);
    for (int r = 0; r < a.rows; ++r) m.row[static_cast<size_t>(r)] = a.row[static_cast<size_t>(r)];
    for (int r = 0; r < b.rows; ++r) {
        m.row[static_cast<size_t>(a.rows + r)] = b.row[static_cast<size_t>(r)];
    }
    return m;
}

void sparse_negate(SparseMat& m) {
    for (SparseRow& r : m.row) {
        for (auto& e : r) e.second = -e.second;
    }
}

namespace {

// w - c * r with both rows sorted by column; exact cancellations are dropped
SparseRow row_axpy(const SparseRow& w, const Rat& c, const SparseRow& r) {
    SparseRow out;
    out.reserve(w.size() + r.size());
    size_t i = 0, j = 0;
    while (i < w.size() || j < r.size()) {
        if (j >= r.size() || (i < w.size() && w[i].first < r[j].first)) {
            out.push_back(w[i++]);
        } else if (i >= w.size() || r[j].first < w[i].first) {
            out.emplace_back(r[j].first, Rat(-c * r[j].second));
            ++j;
        } else {
            Rat v = w[i].second - c * r[j].second;
            if (v != 0) out.emplace_back(w[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

Rat value_at(const SparseRow& r, int col) {
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    if (it == r.end() || it->first != col) return Rat(0);
    return it->second;
}

}  // namespace

int sparse_rref(SparseMat& m, std::vector<int>* pivots) {
    std::vector<SparseRow> basis;  // unit leads, mutually reduced
    std::vector<int> lead;         // sorted pivot columns
    for (SparseRow& w0 : m.row) {
        SparseRow w = std::move(w0);
        if (w.empty()) continue;
        // stored rows vanish at each other's pivots, so the coefficient at
        // every pivot column is fixed before any subtraction
        std::vector<Rat> coeff(basis.size());
        {
            size_t bi = 0;
            for (const auto& e : w) {
                while (bi < lead.size() && lead[bi] < e.first) ++bi;
                if (bi == lead.size()) break;
                if (lead[bi] == e.first) coeff[bi] = e.second;
            }
        }
        for (size_t i = 0; i < basis.size(); ++i) {
            if (coeff[i] != 0) w = row_axpy(w, coeff[i], basis[i]);
        }
        if (w.empty()) continue;
        const Rat p = w.front().second;
        if (p != 1) {
            for (auto& e : w) e.second /= p;
        }
        const int l = w.front().first;
        for (size_t i = 0; i < basis.size(); ++i) {
            const Rat c = value_at(basis[i], l);
            if (c != 0) basis[i] = row_axpy(basis[i], c, w);
        }
        auto it = std::lower_bound(lead.begin(), lead.end(), l);
        const size_t pos = static_cast<size_t>(it - lead.begin());
        lead.insert(it, l);
        basis.insert(basis.begin() + static_cast<long>(pos), std::move(w));
    }
    m.row = std::move(basis);
    if (pivots) *pivots = lead;
    return static_cast<int>(lead.size());
}

int sparse_rank(SparseMat m) {
    std::vector<SparseRow> basis;  // sorted by lead column, forward-reduced
    std::vector<int> lead;
    for (SparseRow& w0 : m.row) {
        SparseRow w = std::move(w0);
        // subtracting a stored row only disturbs columns right of its lead,
        // so one left-to-right sweep settles the row
        size_t bi = 0;
        while (!w.empty()) {
            const int l = w.front().first;
            while (bi < lead.size() && lead[bi] < l) ++bi;
            if (bi == lead.size() || lead[bi] != l) break;
            const Rat c = w.front().second / basis[bi].front().second;
            w = row_axpy(w, c, basis[bi]);
        }
        if (w.empty()) continue;
        const int l = w.front().first;
        auto it = std::lower_bound(lead.begin(), lead.end(), l);
        const size_t pos = static_cast<size_t>(it - lead.begin());
        lead.insert(it, l);
        basis.insert(basis.begin() + static_cast<long>(pos), std::move(w));
    }
    return static_cast<int>(basis.size());
}

QMat sparse_kernel_basis(SparseMat m) {
    std::vector<int> pivots;
    const int rk = sparse_rref(m, &pivots);
    const int cols = m.cols;
    std::vector<int> free_idx(static_cast<size_t>(cols), -1);
    int nfree = 0;
    {
        size_t p = 0;
        for (int c = 0; c < cols; ++c) {
            if (p < pivots.size() && pivots[p] == c) {
                ++p;
                continue;
            }
            free_idx[static_cast<size_t>(c)] = nfree++;
        }
    }
    QMat k = QMat::Zero(cols, nfree);
    for (int c = 0; c < cols; ++c) {
        if (free_idx[static_cast<size_t>(c)] >= 0) k(c, free_idx[static_cast<size_t>(c)]) = 1;
    }
    for (int i = 0; i < rk; ++i) {
        for (const auto& e : m.row[static_cast<size_t>(i)]) {
            const int j = free_idx[static_cast<size_t>(e.first)];
            if (j >= 0) k(pivots[static_cast<size_t>(i)], j) = -e.second;
        }
    }
    return k;
}

}  // namespace taufan
