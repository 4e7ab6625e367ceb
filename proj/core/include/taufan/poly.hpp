#pragma once

#include "taufan/linalg.hpp"
#include "taufan/rational.hpp"

#include <utility>
#include <vector>

namespace taufan {

// Dense univariate polynomial over Q. c[i] is the coefficient of x^i and the
// representation carries no trailing zeros, so the zero polynomial is {}.
struct QPoly {
    std::vector<Rat> c;

    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs);

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    Rat lc() const { return c.back(); }
    Rat coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : Rat(0);
    }
    bool operator==(const QPoly& o) const { return c == o.c; }
};

QPoly qp_x();
QPoly qp_const(const Rat& a);
QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_sub(const QPoly& a, const QPoly& b);
QPoly qp_mul(const QPoly& a, const QPoly& b);
QPoly qp_scale(const QPoly& a, const Rat& s);
// Quotient and remainder; b must be nonzero.
std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b);
QPoly qp_monic(const QPoly& a);
// Monic gcd.
QPoly qp_gcd(const QPoly& a, const QPoly& b);
// monic g = gcd(a, b) together with u, v such that u a + v b = g
struct QPolyExtGcd {
    QPoly g, u, v;
};
QPolyExtGcd qp_ext_gcd(const QPoly& a, const QPoly& b);
QPoly qp_derivative(const QPoly& a);
QPoly qp_pow(const QPoly& a, int k);
std::string qp_to_string(const QPoly& a);

// Product of the distinct irreducible factors, monic.
QPoly squarefree_part(const QPoly& f);

struct QFactorization {
    Rat unit;                                // leading rational unit
    std::vector<std::pair<QPoly, int>> factors;  // monic irreducible, multiplicity
};

// Complete factorization into monic irreducibles over Q
// (Yun squarefree split, then Berlekamp mod p, Hensel lifting and
// subset recombination on each squarefree primitive part).
QFactorization factor(const QPoly& f);

bool is_irreducible(const QPoly& f);

// Characteristic polynomial, monic, computed by the Faddeev-LeVerrier
// recursion. Exact.
QPoly charpoly(const QMat& m);

// Minimal polynomial, monic, from the first linear dependence among the
// vectorized powers of m.
QPoly minpoly(const QMat& m);

// Evaluate f at a square matrix.
QMat qp_eval_matrix(const QPoly& f, const QMat& m);

}  // namespace taufan
