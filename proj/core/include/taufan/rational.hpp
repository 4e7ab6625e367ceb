#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>
#include <vector>

namespace taufan {

// All arithmetic in the library is exact. Rat is the only scalar used for
// linear algebra; Int appears in polynomial factorization and lattice data.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

using IVec = std::vector<long>;

inline Int numer(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denom(const Rat& q) { return boost::multiprecision::denominator(q); }

// "p/q" with the "/q" part omitted for integers; the serialization format
// uses this everywhere a scalar appears.
inline std::string rat_to_string(const Rat& q) {
    if (denom(q) == 1) return numer(q).str();
    return numer(q).str() + "/" + denom(q).str();
}

}  // namespace taufan
