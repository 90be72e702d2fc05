#include "pfshuffle/pfaffian.hpp"

#include <mutex>

namespace pfshuffle {

namespace detail {

std::optional<IndexSet> index_set(std::span<const int> indices, int dimension) {
    if (dimension > 31) throw InputError("pfaffian index sets are limited to dimension 31");
    for (int v : indices) {
        if (v < 1 || v > dimension) {
            throw InputError("pfaffian index " + std::to_string(v) + " outside 1.." + std::to_string(dimension));
        }
    }
    IndexSet set;
    for (int v : indices) {
        const std::uint32_t bit = 1u << (v - 1);
        if (set.mask & bit) return std::nullopt;
        set.mask |= bit;
    }
    set.sign = inversion_sign(indices);
    return set;
}

} // namespace detail

PfaffianContext::PfaffianContext(int n) : n_(n), generic_(generic_matrix(n + 1)) {
    if (n < 0 || n > 30) throw InputError("rank n must lie in 0..30");
}

SparsePoly PfaffianContext::by_mask(std::uint32_t mask) {
    {
        std::shared_lock lock(mutex_);
        if (auto it = cache_.find(mask); it != cache_.end()) return it->second;
    }
    SparsePoly value = detail::expand_first_index(generic_, mask, [this](std::uint32_t sub) { return by_mask(sub); });
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(mask, std::move(value)).first->second;
}

SparsePoly PfaffianContext::pfaffian(std::span<const int> indices) {
    if (indices.size() % 2 != 0) throw ContractViolation("pfaffian of an odd-length index list");
    const auto set = detail::index_set(indices, dimension());
    if (!set) return zero();
    SparsePoly value = by_mask(set->mask);
    if (set->sign < 0) value *= Integer(-1);
    return value;
}

SparsePoly PfaffianContext::pf_row(const Row& row) {
    check_alphabet(row, n_);
    const Row completed = complete_even(row, n_);
    return pfaffian(completed.entries());
}

std::size_t PfaffianContext::cache_size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
}

Integer pf_row_at(const Row& row, const IntMatrix& x) {
    const int n = x.dimension() - 1;
    check_alphabet(row, n);
    const Row completed = complete_even(row, n);
    return pfaffian_of(x, completed.entries());
}

IntMatrix matrix_M(int dimension) {
    if (dimension < 1) throw InputError("matrix M needs dimension >= 1");
    IntMatrix m(dimension, Integer(0));
    for (int i = 1; i <= dimension; ++i) {
        for (int j = i + 1; j <= dimension; ++j) m.set(i, j, Integer(1));
    }
    return m;
}

IntMatrix tridiagonal_matrix(int dimension) {
    if (dimension < 1) throw InputError("tridiagonal matrix needs dimension >= 1");
    IntMatrix m(dimension, Integer(0));
    for (int i = 1; i < dimension; ++i) m.set(i, i + 1, Integer(1));
    return m;
}

} // namespace pfshuffle
