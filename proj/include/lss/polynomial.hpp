#ifndef LSS_POLYNOMIAL_HPP
#define LSS_POLYNOMIAL_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lss/rational_matrix.hpp"

namespace lss {

/// Variable x_{i,j}: vertex i, coordinate j (both 1-based).
struct Variable {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// Sparse exponent vector, factors sorted by variable.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(Variable v, int exp = 1);

    const std::vector<std::pair<Variable, int>>& factors() const {
        return factors_;
    }
    int degree() const;
    int exponent_of(Variable v) const;
    bool involves_row(int i) const;

    Monomial operator*(const Monomial& o) const;

    /// Graded lexicographic order, x_{1,1} most significant.
    static bool grlex_less(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::pair<Variable, int>> factors_;
};

/// Sparse multivariate polynomial with exact integer coefficients. Terms are
/// kept in descending graded-lex order with nonzero coefficients.
class Polynomial {
public:
    using Term = std::pair<Monomial, BigInt>;

    Polynomial() = default;
    static Polynomial zero() { return {}; }
    static Polynomial constant(BigInt c);
    static Polynomial var(Variable v);

    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    bool involves_row(int i) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }

    /// Content 1, positive leading coefficient.
    Polynomial canonicalized() const;

    /// Evaluates with values supplied per variable.
    Rational evaluate(const std::function<Rational(Variable)>& value_of) const;

    std::string to_string(const std::function<std::string(Variable)>& name_of)
        const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
    /// Total order for deduplicated sets of canonical polynomials.
    friend bool operator<(const Polynomial& a, const Polynomial& b);

private:
    std::vector<Term> terms_;
    void normalize(); // sort, merge, drop zeros
    friend Polynomial from_terms(std::vector<Term> terms);
};

Polynomial from_terms(std::vector<Polynomial::Term> terms);

} // namespace lss

#endif
