/**
 * Exact arithmetic scalar types and Eigen typedefs used throughout cep.
 *
 * All geometry in this library is computed over the rationals. The scalar is
 * boost::multiprecision::mpq_rational (GMP-backed), which keeps every value
 * in reduced form with a positive denominator, so equality tests are
 * canonical. Eigen dense types over this scalar give exact linear algebra;
 * FullPivLU with an exact scalar performs rank-revealing elimination with no
 * thresholds.
 */

#ifndef CEP_RATIONAL_HPP
#define CEP_RATIONAL_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <optional>
#include <string>

namespace cep {

using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalRowVector = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;

/// Exact rank of a rational matrix (full-pivot elimination, zero threshold).
inline Eigen::Index exact_rank(const RationalMatrix& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    return Eigen::FullPivLU<RationalMatrix>(m).rank();
}

/// Exact determinant of a square rational matrix.
inline Rational exact_determinant(const RationalMatrix& m)
{
    if (m.rows() == 0)
        return 1;
    return Eigen::FullPivLU<RationalMatrix>(m).determinant();
}

/**
 * Parse an exact rational from one of the accepted spellings:
 * an integer ("-99"), a fraction ("3/4", "-1/2"), or a decimal
 * string ("0.25", "-1.5"). Returns std::nullopt on anything else.
 */
std::optional<Rational> parse_rational(const std::string& text);

/// Render as "a" or "a/b" (reduced, positive denominator).
std::string to_string(const Rational& r);

}  // namespace cep

#endif  // CEP_RATIONAL_HPP
