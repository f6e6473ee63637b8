/**
 * Sparse multivariate polynomials with integer coefficients.
 *
 * The variable set is fixed by the DifferenceVector entry order of a game
 * shape (M variables). Terms are kept sorted in descending lexicographic
 * exponent order with no zero coefficients, so representations are
 * canonical and equality is structural.
 */

#ifndef CEP_POLYNOMIAL_HPP
#define CEP_POLYNOMIAL_HPP

#include "cep/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cep {

using ExponentVector = std::vector<unsigned char>;

class Polynomial {
public:
    struct Term {
        ExponentVector exponents;
        Integer coefficient;
    };

    /// The zero polynomial in `num_variables` variables.
    explicit Polynomial(int num_variables = 0) : num_variables_(num_variables) {}

    static Polynomial constant(int num_variables, Integer value);
    static Polynomial variable(int num_variables, int index);
    /// coefficient * prod x_i^e_i
    static Polynomial monomial(int num_variables, ExponentVector exponents, Integer coefficient);

    int num_variables() const { return num_variables_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t num_terms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// Lexicographically largest term; polynomial must be nonzero.
    const Term& leading_term() const { return terms_.front(); }

    int total_degree() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
    Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }
    /// Total order (term count, then termwise); used for canonical sorting.
    bool operator<(const Polynomial& other) const;

    /// Multiply by coefficient * prod x_i^e_i.
    Polynomial times_term(const ExponentVector& exponents, const Integer& coefficient) const;

    /// Exact division in Z[x]; nullopt if `divisor` does not divide exactly.
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

    /// GCD of all coefficients, signed like the leading coefficient; 0 for
    /// the zero polynomial.
    Integer integer_content() const;

    /// Componentwise minimum of all exponent vectors (the largest monomial
    /// dividing every term); all-zero for the zero polynomial.
    ExponentVector monomial_content() const;

    /// Exact evaluation at a rational point (size must match variable count).
    Rational evaluate(const std::vector<Rational>& point) const;

    /// Flip sign if needed so the leading coefficient is positive. Returns
    /// the sign that was factored out (+1 or -1); +1 for zero.
    int normalize_sign();

    /// Render with the given variable names, e.g. "Y1_1(1,2)*Y2_2(1,2) - ...".
    std::string to_string(const std::vector<std::string>& names) const;

private:
    static bool exponent_less(const ExponentVector& a, const ExponentVector& b);

    void compress();  // sort terms, merge duplicates, drop zeros

    int num_variables_;
    std::vector<Term> terms_;
};

}  // namespace cep

#endif  // CEP_POLYNOMIAL_HPP
