#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pfshuffle/bigint.hpp"
#include "pfshuffle/errors.hpp"

namespace pfshuffle {

/// The variable x_ij of the generic antisymmetric matrix, 1 <= i < j.
/// x_ji is never a separate variable; callers represent it as -x_ij.
class VarIndex {
public:
    VarIndex(int i, int j);

    int i() const { return i_; }
    int j() const { return j_; }
    /// Packed code, ordered like the pair (i, j).
    std::uint16_t code() const { return static_cast<std::uint16_t>(i_ * 256 + j_); }
    static VarIndex from_code(std::uint16_t code) { return VarIndex(code / 256, code % 256); }

    friend auto operator<=>(const VarIndex&, const VarIndex&) = default;

private:
    int i_;
    int j_;
};

/// Sorted variable codes with repetition (x12^2 is {x12, x12}).
using Monomial = std::vector<std::uint16_t>;

/// Graded lexicographic: lower total degree first, then lexicographic on the
/// sorted (i, j) pairs.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Multivariate polynomial over the integers in the variables x_ij of a
/// `dimension` x `dimension` antisymmetric matrix. No zero coefficient is ever
/// stored.
class SparsePoly {
public:
    using TermMap = std::map<Monomial, Integer, MonomialOrder>;

    explicit SparsePoly(int dimension) : dimension_(dimension) {}
    static SparsePoly constant(int dimension, const Integer& c);
    static SparsePoly variable(int dimension, int i, int j);

    int dimension() const { return dimension_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Integer coefficient(const Monomial& m) const;
    int total_degree() const;

    /// Adds c * m; m need not be sorted.
    void add_term(Monomial m, const Integer& c);

    SparsePoly& operator+=(const SparsePoly& other);
    SparsePoly& operator-=(const SparsePoly& other);
    SparsePoly& operator*=(const Integer& c);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(SparsePoly a, const Integer& c) { return a *= c; }
    friend SparsePoly operator*(const Integer& c, SparsePoly a) { return a *= c; }
    SparsePoly operator-() const { return *this * Integer(-1); }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return a.dimension_ == b.dimension_ && a.terms_ == b.terms_;
    }

    /// "x12*x34 - x13*x24 + x14*x23" in canonical monomial order. Variables
    /// print as x<i><j> when dimension <= 9, else x<i>_<j>.
    std::string to_string() const;

    /// True when no stored coefficient is zero and every variable fits the
    /// dimension.
    bool well_formed() const;

private:
    void check_same_context(const SparsePoly& other) const;

    int dimension_;
    TermMap terms_;
};

std::string variable_name(VarIndex v, int dimension);
SparsePoly parse_poly(std::string_view text, int dimension);

/// [{"vars": [[1,2],[3,4]], "coeff": "1"}, ...] with string big integers.
nlohmann::json poly_to_json(const SparsePoly& p);
SparsePoly poly_from_json(const nlohmann::json& j, int dimension);

// Scalar helpers used by the matrix templates below.
inline bool is_zero_scalar(const Integer& v) { return v == 0; }
inline bool is_zero_scalar(const SparsePoly& v) { return v.is_zero(); }
inline Integer one_like(const Integer&) { return 1; }
inline SparsePoly one_like(const SparsePoly& v) { return SparsePoly::constant(v.dimension(), 1); }

/// Antisymmetric matrix storing only its strict upper triangle. Indices are
/// 1-based. `Scalar` is Integer for numeric matrices and SparsePoly for the
/// generic symbolic matrix.
template <class Scalar>
class AntisymMatrix {
public:
    AntisymMatrix(int dimension, Scalar zero)
        : dimension_(dimension), zero_(std::move(zero)),
          upper_(static_cast<std::size_t>(dimension * (dimension - 1) / 2), zero_) {}

    int dimension() const { return dimension_; }
    const Scalar& zero() const { return zero_; }

    /// Sets X_ij = value and X_ji = -value; i != j.
    void set(int i, int j, Scalar value) {
        if (i == j) throw InputError("antisymmetric matrix diagonal is fixed at zero");
        if (i > j) {
            std::swap(i, j);
            value = -value;
        }
        upper_[index(i, j)] = std::move(value);
    }

    Scalar at(int i, int j) const {
        if (i == j) return zero_;
        if (i < j) return upper_[index(i, j)];
        return -upper_[index(j, i)];
    }

    /// Entry X_ij for i < j.
    const Scalar& upper(int i, int j) const { return upper_[index(i, j)]; }

private:
    std::size_t index(int i, int j) const {
        if (i < 1 || j > dimension_ || i >= j) throw InputError("matrix index out of range");
        // rows 1..i-1 contribute (d-1) + (d-2) + ... entries
        const int before = (i - 1) * dimension_ - (i - 1) * i / 2;
        return static_cast<std::size_t>(before + (j - i - 1));
    }

    int dimension_;
    Scalar zero_;
    std::vector<Scalar> upper_;
};

using IntMatrix = AntisymMatrix<Integer>;
using SymbolicMatrix = AntisymMatrix<SparsePoly>;

/// The generic matrix with X_ij = x_ij above the diagonal.
SymbolicMatrix generic_matrix(int dimension);

/// Laplace expansion along rows memoized on the set of used columns; exact for
/// any commutative Scalar.
template <class Scalar>
Scalar determinant(const AntisymMatrix<Scalar>& x) {
    const int d = x.dimension();
    if (d > 20) throw InputError("determinant: dimension too large for subset memoization");
    std::vector<std::optional<Scalar>> memo(std::size_t{1} << d);
    auto rec = [&](auto&& self, std::uint32_t used) -> Scalar {
        const int row = __builtin_popcount(used);
        if (row == d) return one_like(x.zero());
        if (memo[used]) return *memo[used];
        Scalar acc = x.zero();
        int position = 0;
        for (int c = 0; c < d; ++c) {
            if (used & (1u << c)) continue;
            Scalar entry = x.at(row + 1, c + 1);
            if (!is_zero_scalar(entry)) {
                Scalar minor = self(self, used | (1u << c));
                if (position % 2 == 0) {
                    acc += entry * minor;
                } else {
                    acc -= entry * minor;
                }
            }
            ++position;
        }
        memo[used] = acc;
        return acc;
    };
    return rec(rec, 0);
}

Integer evaluate(const SparsePoly& p, const IntMatrix& x);

} // namespace pfshuffle
