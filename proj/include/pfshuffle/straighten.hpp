#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pfshuffle/bigint.hpp"
#include "pfshuffle/combinatorics.hpp"
#include "pfshuffle/formal_quadratic.hpp"
#include "pfshuffle/pfaffian.hpp"
#include "pfshuffle/polyring.hpp"

namespace pfshuffle {

enum class ReductionOrder {
    canonical,  // leftmost non-standard pair, canonical arrangement
    randomized, // random non-standard pair and random admissible arrangement
};

struct StraighteningOptions {
    std::size_t step_budget = 1'000'000;
    ReductionOrder order = ReductionOrder::canonical;
    std::uint64_t seed = 0;
};

/// Degree-d monomials: rows sorted in canonical Row order. A monomial is
/// standard iff consecutive rows satisfy row_leq.
using MonomialExpansion = std::map<std::vector<Row>, Integer>;

struct StraighteningResult {
    FormalQuadratic expansion;
    std::size_t steps = 0; // shuffling relations applied during the call
};

struct MonomialResult {
    MonomialExpansion expansion;
    std::size_t steps = 0;
};

/// Budget exhausted or descent certificate violated. Carries the tableau being
/// reduced and a rendering of the state reached so far.
class StraighteningError : public std::runtime_error {
public:
    StraighteningError(const std::string& what, std::vector<Row> tableau, std::string state)
        : std::runtime_error(what), tableau_(std::move(tableau)), state_(std::move(state)) {}

    const std::vector<Row>& tableau() const { return tableau_; }
    const std::string& state() const { return state_; }

private:
    std::vector<Row> tableau_;
    std::string state_;
};

/// Rewrites products of basis vectors x(I) into standard monomials by
/// repeated use of shuffling relations.
///
/// Reducing a non-standard pair (R1 / R2) recurses only into pairs arranged
/// with a first row strictly below R1; the chain of first rows along the
/// recursion is checked at every step, so the recursion depth is bounded by
/// the height of the row poset. Results are memoized per unordered pair.
/// Calls may run concurrently.
class Straightener {
public:
    explicit Straightener(int n, StraighteningOptions options = {});

    int rank() const { return n_; }
    const StraighteningOptions& options() const { return options_; }

    /// x(a) x(b) as a combination of standard pairs. Rows may be unsorted;
    /// a row with a repeated entry gives the empty expansion.
    StraighteningResult straighten_pair(const Row& a, const Row& b) const;
    StraighteningResult straighten(const FormalQuadratic& f) const;

    /// x(R1) x(R2) ... x(Rd) for d >= 1, by replacing adjacent non-standard
    /// pairs until every monomial is standard.
    MonomialResult straighten_monomial(const std::vector<Row>& rows) const;

    std::size_t memo_size() const;

private:
    struct Call;
    const FormalQuadratic& reduce(const PairKey& key, Call& call) const;

    int n_;
    StraighteningOptions options_;
    mutable std::shared_mutex mutex_;
    mutable std::map<PairKey, FormalQuadratic> memo_;
};

/// True iff consecutive rows of the canonically sorted monomial are comparable.
bool is_standard_monomial(const std::vector<Row>& sorted_rows);

/// Rows sorted with sign and put in canonical order; nullopt when a row
/// repeats an entry.
std::optional<std::pair<std::vector<Row>, int>> canonical_monomial(const std::vector<Row>& rows);

/// "x(123/4/∅) - 2*x(12/34/∅)"; "0" when empty.
std::string to_string(const MonomialExpansion& e, int n);
/// {"terms": [{"rows": [[1,2,3],[4],[]], "coeff": "1"}, ...]}
nlohmann::json monomial_expansion_to_json(const MonomialExpansion& e);
MonomialExpansion monomial_expansion_from_json(const nlohmann::json& j);

MonomialExpansion to_monomial_expansion(const FormalQuadratic& f);

/// pf_{R1} ... pf_{Rd}, and its linear extension.
SparsePoly monomial_pf(const std::vector<Row>& rows, PfaffianContext& ctx);
SparsePoly expansion_pf(const MonomialExpansion& e, PfaffianContext& ctx);

} // namespace pfshuffle
