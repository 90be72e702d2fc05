#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace pfshuffle {

/// A finite sequence of integers over the alphabet 1..n. The alphabet size is
/// never stored in the row; every operation that depends on it takes `n`.
///
/// Rows compare by the canonical total order: longer rows first, then
/// lexicographically ascending. This order exists for deterministic output
/// only and is unrelated to `row_leq`.
class Row {
public:
    Row() = default;
    Row(std::initializer_list<int> entries) : entries_(entries) {}
    explicit Row(std::vector<int> entries) : entries_(std::move(entries)) {}

    std::span<const int> entries() const { return entries_; }
    const std::vector<int>& values() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    /// Strictly increasing entries. The empty row is standard.
    bool is_standard() const;
    bool contains(int value) const;
    bool has_repeats() const;

    /// Concatenation IJ.
    Row concat(const Row& other) const;
    /// The first `count` entries, and the entries from `first` on.
    Row prefix(std::size_t count) const;
    Row suffix(std::size_t first) const;

    friend bool operator==(const Row&, const Row&) = default;
    friend std::strong_ordering operator<=>(const Row& a, const Row& b);

private:
    std::vector<int> entries_;
};

struct SignedRow {
    Row row;
    int sign = 1;
};

/// Sign of the permutation sorting `entries`, by merge-sort inversion count.
/// Entries must be distinct.
int inversion_sign(std::span<const int> entries);

/// Throws InputError unless every entry of the row lies in 1..n.
void check_alphabet(const Row& row, int n);

/// (I sorted, sign of the sorting permutation), or nullopt when an entry
/// repeats (the corresponding basis element is zero).
std::optional<SignedRow> sort_with_sign(const Row& row, int n);
/// Same, without an alphabet check.
std::optional<SignedRow> sort_with_sign(const Row& row);

/// The row order: R <= S iff |R| >= |S| and R_h <= S_h for h <= |S|.
bool row_leq(const Row& lower, const Row& upper);
inline bool comparable(const Row& a, const Row& b) { return row_leq(a, b) || row_leq(b, a); }

/// All 2^n standard rows over 1..n, in canonical order.
std::vector<Row> standard_rows(int n);

/// j_s: insert `value` after the maximal prefix of entries <= value.
Row insert_entry(const Row& row, int value);
/// d_s: remove every occurrence of `value`.
Row delete_entry(const Row& row, int value);
/// The increasing row of {1..n} minus the entries of `row`.
Row complement(const Row& row, int n);
/// I^0: appends n+1 when |I| is odd.
Row complete_even(const Row& row, int n);

/// A bijection of 1..n, stored as its image list.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    /// The transposition of a and b in S_n.
    static Permutation transposition(int n, int a, int b);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }
    int sign() const;
    Permutation inverse() const;
    /// (this * other)(i) = this(other(i)).
    Permutation compose(const Permutation& other) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Every permutation of 1..n in lexicographic order of image lists.
std::vector<Permutation> all_permutations(int n);

/// sigma . I, entrywise (order kept, no sorting).
Row permute(const Permutation& sigma, const Row& row);

/// A sequence of rows with weakly decreasing lengths.
class Tableau {
public:
    Tableau() = default;
    /// Throws InputError when row lengths increase.
    explicit Tableau(std::vector<Row> rows);
    Tableau(Row top, Row bottom) : Tableau(std::vector<Row>{std::move(top), std::move(bottom)}) {}

    const std::vector<Row>& rows() const { return rows_; }
    std::size_t degree() const { return rows_.size(); }
    const Row& operator[](std::size_t i) const { return rows_[i]; }

    /// All rows standard and I_1 <= I_2 <= ... <= I_d.
    bool is_standard() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    std::vector<Row> rows_;
};

/// Canonical form (IJ / HK) of a non-standard two-row tableau whose first
/// violation of the column condition is in column `r + 1`.
struct CanonicalSplit {
    Row top_head;    // I, length r
    Row top_tail;    // J, length s
    Row bottom_head; // H, length r + 1
    Row bottom_tail; // K, length t < s
    std::size_t r = 0;

    Row top() const { return top_head.concat(top_tail); }
    Row bottom() const { return bottom_head.concat(bottom_tail); }

    friend bool operator==(const CanonicalSplit&, const CanonicalSplit&) = default;
};

/// Throws ContractViolation when the tableau is not two standard rows forming
/// a non-standard tableau.
CanonicalSplit canonical_split(const Tableau& tableau);

/// True iff the two-row tableau is non-standard but swapping its two
/// (equal-length) rows gives a standard tableau.
bool is_pure_row_swap(const Tableau& tableau);

/// T^sigma: every row replaced by (sigma . R)^<=.
Tableau permute_tableau(const Permutation& sigma, const Tableau& tableau);

/// sigma is compatible with an r-standard T when T^sigma is again r-standard
/// with canonical form (I^s J^s / H^s K^s) and sigma . K is increasing.
bool is_compatible(const Permutation& sigma, const Tableau& tableau);

/// Text: compact digits ("23") when n <= 9, otherwise space separated.
std::string format_row(const Row& row, int n);
/// Accepts "23", "2 3", "2,3"; compact form only when n <= 9. Empty text and
/// "∅" denote the empty row.
Row parse_row(std::string_view text, int n);
/// Rows separated by ';' ("23;14", "1234;").
std::string format_tableau(const Tableau& tableau, int n);
Tableau parse_tableau(std::string_view text, int n);
/// Rows separated by ';' without the length-ordering requirement.
std::vector<Row> parse_row_list(std::string_view text, int n);

void to_json(nlohmann::json& j, const Row& row);
void from_json(const nlohmann::json& j, Row& row);
void to_json(nlohmann::json& j, const Tableau& tableau);
void from_json(const nlohmann::json& j, Tableau& tableau);

} // namespace pfshuffle
