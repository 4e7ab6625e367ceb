#pragma once

#include "taufan/rational.hpp"

#include <optional>
#include <vector>

namespace taufan {

// Reduced row echelon form in place. Returns the rank; pivot columns are
// appended to *pivots when given. Pivoting always picks the first nonzero
// entry, so the result is canonical for a given input.
int rref(QMat& m, std::vector<int>* pivots = nullptr);

int rank_of(const QMat& m);

// Canonical basis of the right kernel (one column per free variable of the
// RREF, in column order).
QMat kernel_basis(const QMat& m);

// One solution of A x = b, or nullopt when inconsistent.
std::optional<QVec> solve(const QMat& a, const QVec& b);

// Column-wise solve of A X = B.
std::optional<QMat> solve_matrix(const QMat& a, const QMat& b);

Rat det(const QMat& m);

std::optional<QMat> inverse(const QMat& m);

QMat hstack(const QMat& a, const QMat& b);
QMat vstack(const QMat& a, const QMat& b);

// Basis of the column span as a subset of the input columns (indices).
std::vector<int> independent_columns(const QMat& m);

bool in_column_span(const QMat& a, const QVec& v);

bool is_zero_vec(const QVec& v);
bool is_zero_mat(const QMat& m);
bool same_mat(const QMat& a, const QMat& b);

// Incremental echelon basis of a growing span, for repeated membership
// tests without re-eliminating from scratch.
class SpanOracle {
  public:
    explicit SpanOracle(Eigen::Index dim) : dim_(dim) {}

    int rank() const { return static_cast<int>(rows_.size()); }
    bool contains(const QVec& v) const { return is_zero_vec(reduce(v)); }
    // Inserts v unless it is already in the span (the zero vector never is).
    // Returns true when the span grew.
    bool add(const QVec& v);

  private:
    QVec reduce(const QVec& v) const;

    Eigen::Index dim_;
    std::vector<QVec> rows_;           // unit leading entry, mutually reduced
    std::vector<Eigen::Index> lead_;   // leading coordinate per row
};

// Clears denominators and divides by the content; the zero vector maps to
// itself. Direction is preserved, never flipped.
QVec primitive_integer_vector(const QVec& v);

// Rows as sorted (column, value) pairs holding only the nonzero entries.
// The hom-space systems are large but very sparse, and eliminating them in
// this form avoids materializing millions of zero rationals.
using SparseRow = std::vector<std::pair<int, Rat>>;

struct SparseMat {
    int rows = 0;
    int cols = 0;
    std::vector<SparseRow> row;
};

SparseMat sparse_zero(int rows, int cols);
// Sort every row by column and merge duplicate entries, dropping zeros.
void sparse_sort_rows(SparseMat& m);
QMat to_dense(const SparseMat& m);
SparseMat sparse_hstack(const SparseMat& a, const SparseMat& b);
SparseMat sparse_vstack(const SparseMat& a, const SparseMat& b);
void sparse_negate(SparseMat& m);

// Reduced row echelon form; afterwards `row` holds exactly the rank many
// nonzero rows ordered by pivot column. The reduced form agrees with rref
// on the dense matrix, so downstream results are identical.
int sparse_rref(SparseMat& m, std::vector<int>* pivots = nullptr);

// Rank by forward elimination only (cheaper than the reduced form).
int sparse_rank(SparseMat m);

// Matches kernel_basis on the dense form of m.
QMat sparse_kernel_basis(SparseMat m);

}  // namespace taufan
