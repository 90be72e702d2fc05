#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pfshuffle/bigint.hpp"

namespace pfshuffle {

/// Dense polynomial in one variable q with integer coefficients; index i
/// holds the coefficient of q^i. Trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients and degree -1.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Integer> coefficients);
    static QPoly constant(const Integer& c);
    /// c * q^exponent
    static QPoly monomial(const Integer& c, int exponent);

    const std::vector<Integer>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Integer coefficient(int exponent) const;
    Integer evaluate(const Integer& q) const;

    QPoly& operator+=(const QPoly& other);
    QPoly& operator-=(const QPoly& other);
    QPoly& operator*=(const QPoly& other);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    friend QPoly operator*(const Integer& c, const QPoly& p);
    QPoly operator-() const;
    QPoly shifted(int exponent) const;

    /// Division with remainder by a divisor whose leading coefficient is +-1,
    /// so the quotient stays integral.
    std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;

    /// "1 + q + 2*q^2 + q^3 + q^4", ascending exponents; "0" for zero.
    std::string to_string() const;

    friend bool operator==(const QPoly&, const QPoly&) = default;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Gaussian binomial [m, k]_q; the zero polynomial unless 0 <= k <= m.
/// Computed by the q-Pascal recurrence and memoized process-wide.
QPoly gauss_binom(int m, int k);

/// [m, k]_{-1} in closed form: binomial(m/2, k/2) (floors) when m is odd or
/// k is even, and 0 otherwise or outside 0 <= k <= m.
Integer gauss_binom_at_minus1(int m, int k);

/// Ordinary binomial coefficient, zero outside 0 <= k <= m.
Integer binomial(int m, int k);

/// Sum_{h=0}^{s} (-1)^h q^{h(h-1)/2} [m, s-h]_q [m-s+h, h]_q as a polynomial.
/// Throws InputError unless 1 <= s <= m.
QPoly alternating_sum(int m, int s);
/// True iff alternating_sum(m, s) is the zero polynomial.
bool check_alternating_identity(int m, int s);

} // namespace pfshuffle
