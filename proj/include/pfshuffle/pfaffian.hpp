#pragma once

#include <cstdint>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "pfshuffle/combinatorics.hpp"
#include "pfshuffle/polyring.hpp"

namespace pfshuffle {

namespace detail {

// Pf of the principal submatrix on the sorted index set `mask` (bit i-1 for
// index i), expanding along the smallest index:
//   Pf = sum_k (-1)^k x_{a_1 a_k} Pf(a without a_1, a_k), k = 2..2m.
template <class Scalar, class Recurse>
Scalar expand_first_index(const AntisymMatrix<Scalar>& x, std::uint32_t mask, Recurse&& recurse) {
    if (mask == 0) return one_like(x.zero());
    const int first = __builtin_ctz(mask);
    const std::uint32_t rest = mask & (mask - 1);
    Scalar acc = x.zero();
    int k = 2;
    for (std::uint32_t bits = rest; bits != 0; bits &= bits - 1, ++k) {
        const int other = __builtin_ctz(bits);
        const Scalar& entry = x.upper(first + 1, other + 1);
        if (is_zero_scalar(entry)) continue;
        Scalar minor = recurse(rest & ~(1u << other));
        if (is_zero_scalar(minor)) continue;
        if (k % 2 == 0) {
            acc += entry * minor;
        } else {
            acc -= entry * minor;
        }
    }
    return acc;
}

// Sorted bitmask plus sorting sign of an index list, or nullopt on repeats.
struct IndexSet {
    std::uint32_t mask = 0;
    int sign = 1;
};
std::optional<IndexSet> index_set(std::span<const int> indices, int dimension);

} // namespace detail

/// Pfaffian of the principal submatrix X_{indices}: indices are 1-based and
/// may be unordered (the value picks up the sign of the sorting permutation)
/// or repeated (the value is zero). The empty list gives 1.
///
/// Throws ContractViolation for odd-length lists and InputError for indices
/// outside 1..dimension.
template <class Scalar>
Scalar pfaffian_of(const AntisymMatrix<Scalar>& x, std::span<const int> indices, bool memoize = true) {
    if (indices.size() % 2 != 0) throw ContractViolation("pfaffian of an odd-length index list");
    const auto set = detail::index_set(indices, x.dimension());
    if (!set) return x.zero();
    std::unordered_map<std::uint32_t, Scalar> memo;
    auto rec = [&](auto&& self, std::uint32_t mask) -> Scalar {
        if (memoize) {
            if (auto it = memo.find(mask); it != memo.end()) return it->second;
        }
        Scalar value = detail::expand_first_index(x, mask, [&](std::uint32_t sub) { return self(self, sub); });
        if (memoize) memo.emplace(mask, value);
        return value;
    };
    Scalar value = rec(rec, set->mask);
    if (set->sign < 0) value = -value;
    return value;
}

/// Symbolic pfaffians pf_I for the generic (n+1) x (n+1) antisymmetric
/// matrix. Subset pfaffians are cached; the cache is safe for concurrent use
/// (readers share, insertion is idempotent).
class PfaffianContext {
public:
    explicit PfaffianContext(int n);

    int rank() const { return n_; }
    int dimension() const { return n_ + 1; }
    const SymbolicMatrix& generic() const { return generic_; }

    SparsePoly zero() const { return SparsePoly(dimension()); }
    SparsePoly one() const { return SparsePoly::constant(dimension(), 1); }

    /// Pf(X_{indices}) for the generic matrix, indices in 1..n+1.
    SparsePoly pfaffian(std::span<const int> indices);
    /// pf_I = Pf(X_{I^0}); entries of I in 1..n, any order, repeats give 0.
    SparsePoly pf_row(const Row& row);

    std::size_t cache_size() const;

private:
    SparsePoly by_mask(std::uint32_t mask);

    int n_;
    SymbolicMatrix generic_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::uint32_t, SparsePoly> cache_;
};

/// pf_I evaluated at a numeric (n+1) x (n+1) matrix.
Integer pf_row_at(const Row& row, const IntMatrix& x);

/// Antisymmetric matrix with every entry above the diagonal equal to 1; every
/// even principal pfaffian, for any choice of increasing indices, equals 1.
IntMatrix matrix_M(int dimension);

/// +1 on the superdiagonal, -1 below it. Its full pfaffian is 1 in even
/// dimension, but principal minors such as {1,3} have pfaffian 0.
IntMatrix tridiagonal_matrix(int dimension);

} // namespace pfshuffle
