#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "pfshuffle/bigint.hpp"
#include "pfshuffle/combinatorics.hpp"

namespace pfshuffle {

class PfaffianContext;
class SparsePoly;

/// An unordered pair of standard rows {A, B}, stored in its canonical
/// arrangement (see `normalize_pair`).
struct PairKey {
    Row first;
    Row second;

    Tableau tableau() const { return Tableau(first, second); }
    bool is_standard() const { return row_leq(first, second); }

    friend bool operator==(const PairKey&, const PairKey&) = default;
    friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

/// Canonical arrangement of two standard rows: the longer row first; for equal
/// lengths the standard arrangement when the rows are comparable, otherwise
/// the lexicographically larger row first.
PairKey normalize_pair(Row a, Row b);

/// Integer combination of products x(A) x(B) of basis vectors, i.e. an
/// element of the symmetric square of the spin module.
class FormalQuadratic {
public:
    using TermMap = std::map<PairKey, Integer>;

    FormalQuadratic() = default;

    /// Adds c * x(a) x(b) for arbitrary rows: each row is sorted with its sign
    /// and rows with repeated entries contribute nothing.
    void add(const Row& a, const Row& b, const Integer& c);
    /// Adds c * x(key); the key rows must already be standard.
    void add(const PairKey& key, const Integer& c);

    Integer coefficient(const Row& a, const Row& b) const;
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    FormalQuadratic& operator+=(const FormalQuadratic& other);
    FormalQuadratic& operator-=(const FormalQuadratic& other);
    FormalQuadratic& operator*=(const Integer& c);
    friend FormalQuadratic operator+(FormalQuadratic a, const FormalQuadratic& b) { return a += b; }
    friend FormalQuadratic operator-(FormalQuadratic a, const FormalQuadratic& b) { return a -= b; }
    friend FormalQuadratic operator*(const Integer& c, FormalQuadratic a) { return a *= c; }

    friend bool operator==(const FormalQuadratic&, const FormalQuadratic&) = default;

    /// Applies a row map to both rows of every term. The map returns the image
    /// row (not necessarily sorted) or nullopt for zero.
    FormalQuadratic transform_rows(const std::function<std::optional<Row>(const Row&)>& map) const;

    /// "x(23/14) - x(13/24) + ... - x(1234/∅)" in canonical key order; "0" when
    /// empty.
    std::string to_string(int n) const;

private:
    TermMap terms_;
};

FormalQuadratic parse_formal_quadratic(std::string_view text, int n);

/// {"terms": [{"rows": [[2,3],[1,4]], "coeff": "1"}, ...]}
nlohmann::json to_json_value(const FormalQuadratic& f);
FormalQuadratic formal_quadratic_from_json(const nlohmann::json& j);

/// Maps x(A) x(B) to pf_A pf_B (x(∅) to 1) and sums.
SparsePoly pfaffian_substitute(const FormalQuadratic& f, PfaffianContext& ctx);

} // namespace pfshuffle
