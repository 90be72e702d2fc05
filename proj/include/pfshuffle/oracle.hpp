#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <nlohmann/json.hpp>

#include "pfshuffle/bigint.hpp"
#include "pfshuffle/formal_quadratic.hpp"
#include "pfshuffle/pfaffian.hpp"
#include "pfshuffle/polyring.hpp"

namespace pfshuffle {

struct OracleConfig {
    int bound = 5;            // largest rank accepted without the override
    bool allow_large = false; // accept n > bound
    unsigned threads = 1;     // matrix construction only
};

/// Coefficients of pf_I pf_J for every unordered pair of standard rows.
///
/// The matrix is block diagonal: the product pf_I pf_J only involves
/// monomials whose index content is I0 + J0 (as multisets), so rows are
/// grouped by that content and each block only touches its own columns.
struct RelationMatrix {
    using SparseRow = std::vector<std::pair<std::size_t, Integer>>; // (column, value), sorted

    int n = 0;
    std::vector<PairKey> pairs;     // row labels, canonical order
    std::vector<Monomial> columns;  // column labels, MonomialOrder
    std::vector<SparseRow> rows;    // rows[i] belongs to pairs[i]
    std::vector<std::vector<std::size_t>> blocks; // row indices sharing one content
    std::map<PairKey, std::size_t> lookup;

    std::size_t row_count() const { return pairs.size(); }
    std::size_t column_count() const { return columns.size(); }
    /// Row index of a pair, via its canonical arrangement.
    std::size_t index_of(const PairKey& key) const;
};

/// Refuses n above the configured bound unless overridden (InputError).
RelationMatrix build_relation_matrix(int n, PfaffianContext& ctx, const OracleConfig& config = {});

/// Rank of an integer matrix by fraction-free Bareiss elimination.
std::size_t bareiss_rank(std::vector<std::vector<Integer>> a);

std::size_t matrix_rank(const RelationMatrix& m);

/// Basis of {v : v^T M = 0}, one primitive integer vector per free column of
/// the eliminated transpose, first nonzero entry positive. Every vector is
/// checked against M before it is returned.
std::vector<FormalQuadratic> kernel_basis(const RelationMatrix& m);

/// v^T M == 0, computed exactly. Pairs outside the matrix throw InputError.
bool in_kernel(const RelationMatrix& m, const FormalQuadratic& v);

/// Rank of a family of formal quadratics, as integer vectors over the pairs.
std::size_t family_rank(const RelationMatrix& m, const std::vector<FormalQuadratic>& family);

struct SpanReport {
    int n = 0;
    std::size_t pairs = 0;
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;
    std::size_t theta_count = 0;
    std::size_t theta_rank = 0;
    bool all_theta_vanish = false; // every relation in the kernel
    bool span_ok = false;          // additionally theta_rank == kernel_dim
};
SpanReport span_equals_kernel(int n, PfaffianContext& ctx, const OracleConfig& config = {});

struct IndependenceReport {
    int n = 0;
    int degree = 0;
    std::size_t count = 0;      // standard monomials of this degree
    std::size_t rank = 0;       // rank of their pfaffian expansions
    std::size_t kernel_dim = 0; // degree 2 only
    std::size_t total = 0;      // degree 1: 2^n; degree 2: C(2^n + 1, 2)
    bool independent = false;
    bool count_ok = false;      // degree 2: count + kernel_dim == total
};
/// degree is 1 or 2; anything else throws InputError.
IndependenceReport standard_monomial_independence(int n, int degree, PfaffianContext& ctx,
                                                  const OracleConfig& config = {});

/// Standard pairs I <= J over 1..n (I = J allowed), by enumeration.
std::size_t count_standard_pairs(int n);
/// C(2^n + 1, 2).
std::size_t pair_count(int n);

void to_json(nlohmann::json& j, const SpanReport& r);
void to_json(nlohmann::json& j, const IndependenceReport& r);

} // namespace pfshuffle
