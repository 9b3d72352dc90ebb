#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cshuf {

// Sparse univariate polynomial in q with exact 64-bit integer coefficients.
// Zero coefficients are never stored; the zero polynomial is the empty map.
// Coefficient overflow throws std::overflow_error.
class QPoly {
public:
    QPoly() = default;

    static QPoly constant(long long c);
    static QPoly monomial(int exp, long long coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    long long coeff(int exp) const;
    long long eval_at_one() const;

    QPoly& operator+=(const QPoly& rhs);
    friend QPoly operator+(QPoly lhs, const QPoly& rhs) {
        lhs += rhs;
        return lhs;
    }
    QPoly operator*(const QPoly& rhs) const;

    // Multiplication by q^k. k must leave all exponents nonnegative.
    QPoly shifted(int k) const;

    bool operator==(const QPoly&) const = default;

    const std::map<int, long long>& terms() const { return terms_; }
    std::vector<std::pair<int, long long>> pairs() const;

    // Canonical text: ascending exponents, terms joined by " + ",
    // exponent 0 as the bare coefficient, exponent 1 as "q", unit
    // coefficients omitted. The zero polynomial renders as "0".
    std::string to_string() const;

private:
    void add_term(int exp, long long c);
    std::map<int, long long> terms_;
};

// Gaussian binomial [n m], computed by the additive Pascal recurrence
// [n m] = [n-1 m] + q^{n-m} [n-1 m-1] with memoization. Out-of-range
// arguments (m < 0, m > n, or n < 0) give the zero polynomial.
QPoly gauss_binomial(int n, int m);

}  // namespace cshuf
