#include "pfshuffle/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "pfshuffle/errors.hpp"

namespace pfshuffle {

namespace {

// Counts inversions of entries[lo, hi) while merge-sorting them in place.
std::size_t count_inversions(std::vector<int>& entries, std::vector<int>& scratch, std::size_t lo,
                             std::size_t hi) {
    if (hi - lo < 2) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::size_t inversions = count_inversions(entries, scratch, lo, mid) +
                             count_inversions(entries, scratch, mid, hi);
    std::size_t a = lo, b = mid, out = lo;
    while (a < mid && b < hi) {
        if (entries[b] < entries[a]) {
            inversions += mid - a;
            scratch[out++] = entries[b++];
        } else {
            scratch[out++] = entries[a++];
        }
    }
    while (a < mid) scratch[out++] = entries[a++];
    while (b < hi) scratch[out++] = entries[b++];
    std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
              scratch.begin() + static_cast<std::ptrdiff_t>(hi),
              entries.begin() + static_cast<std::ptrdiff_t>(lo));
    return inversions;
}

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    return text;
}

} // namespace

bool Row::is_standard() const {
    return std::adjacent_find(entries_.begin(), entries_.end(), std::greater_equal<>()) == entries_.end();
}

bool Row::contains(int value) const {
    return std::find(entries_.begin(), entries_.end(), value) != entries_.end();
}

bool Row::has_repeats() const {
    std::vector<int> sorted = entries_;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

Row Row::concat(const Row& other) const {
    std::vector<int> out = entries_;
    out.insert(out.end(), other.entries_.begin(), other.entries_.end());
    return Row(std::move(out));
}

Row Row::prefix(std::size_t count) const {
    count = std::min(count, entries_.size());
    return Row(std::vector<int>(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(count)));
}

Row Row::suffix(std::size_t first) const {
    first = std::min(first, entries_.size());
    return Row(std::vector<int>(entries_.begin() + static_cast<std::ptrdiff_t>(first), entries_.end()));
}

std::strong_ordering operator<=>(const Row& a, const Row& b) {
    if (a.size() != b.size()) return b.size() <=> a.size();
    return a.entries_ <=> b.entries_;
}

int inversion_sign(std::span<const int> entries) {
    std::vector<int> work(entries.begin(), entries.end());
    std::vector<int> scratch(work.size());
    return count_inversions(work, scratch, 0, work.size()) % 2 == 0 ? 1 : -1;
}

void check_alphabet(const Row& row, int n) {
    for (int v : row) {
        if (v < 1 || v > n) {
            throw InputError("row entry " + std::to_string(v) + " outside alphabet 1.." + std::to_string(n));
        }
    }
}

std::optional<SignedRow> sort_with_sign(const Row& row) {
    if (row.has_repeats()) return std::nullopt;
    std::vector<int> sorted = row.values();
    std::sort(sorted.begin(), sorted.end());
    return SignedRow{Row(std::move(sorted)), inversion_sign(row.entries())};
}

std::optional<SignedRow> sort_with_sign(const Row& row, int n) {
    check_alphabet(row, n);
    return sort_with_sign(row);
}

bool row_leq(const Row& lower, const Row& upper) {
    if (lower.size() < upper.size()) return false;
    for (std::size_t h = 0; h < upper.size(); ++h) {
        if (lower[h] > upper[h]) return false;
    }
    return true;
}

std::vector<Row> standard_rows(int n) {
    std::vector<Row> rows;
    const unsigned count = 1u << n;
    rows.reserve(count);
    for (unsigned mask = 0; mask < count; ++mask) {
        std::vector<int> entries;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) entries.push_back(i + 1);
        }
        rows.emplace_back(std::move(entries));
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

Row insert_entry(const Row& row, int value) {
    std::vector<int> out;
    out.reserve(row.size() + 1);
    std::size_t h = 0;
    while (h < row.size() && row[h] <= value) out.push_back(row[h++]);
    out.push_back(value);
    while (h < row.size()) out.push_back(row[h++]);
    return Row(std::move(out));
}

Row delete_entry(const Row& row, int value) {
    std::vector<int> out;
    out.reserve(row.size());
    std::copy_if(row.begin(), row.end(), std::back_inserter(out), [value](int v) { return v != value; });
    return Row(std::move(out));
}

Row complement(const Row& row, int n) {
    std::vector<int> out;
    for (int v = 1; v <= n; ++v) {
        if (!row.contains(v)) out.push_back(v);
    }
    return Row(std::move(out));
}

Row complete_even(const Row& row, int n) {
    if (row.size() % 2 == 0) return row;
    return row.concat(Row{n + 1});
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)]) {
            throw InputError("not a permutation of 1.." + std::to_string(images_.size()));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
    return p;
}

int Permutation::sign() const { return inversion_sign(images_); }

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (other.size() != size()) throw InputError("composing permutations of different degree");
    std::vector<int> out(images_.size());
    for (int i = 1; i <= size(); ++i) out[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
    return Permutation(std::move(out));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

Row permute(const Permutation& sigma, const Row& row) {
    check_alphabet(row, sigma.size());
    std::vector<int> out;
    out.reserve(row.size());
    for (int v : row) out.push_back(sigma(v));
    return Row(std::move(out));
}

// ---------------------------------------------------------------------------

Tableau::Tableau(std::vector<Row> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 1; i < rows_.size(); ++i) {
        if (rows_[i].size() > rows_[i - 1].size()) throw InputError("tableau row lengths must weakly decrease");
    }
}

bool Tableau::is_standard() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (!rows_[i].is_standard()) return false;
        if (i > 0 && !row_leq(rows_[i - 1], rows_[i])) return false;
    }
    return true;
}

CanonicalSplit canonical_split(const Tableau& tableau) {
    if (tableau.degree() != 2) throw ContractViolation("canonical split needs a two-row tableau");
    const Row& top = tableau[0];
    const Row& bottom = tableau[1];
    if (!top.is_standard() || !bottom.is_standard()) throw ContractViolation("canonical split needs standard rows");
    std::size_t column = 0;
    while (column < bottom.size() && top[column] <= bottom[column]) ++column;
    if (column == bottom.size()) throw ContractViolation("canonical split of a standard tableau");
    CanonicalSplit split{top.prefix(column), top.suffix(column), bottom.prefix(column + 1),
                         bottom.suffix(column + 1), column};
    return split;
}

bool is_pure_row_swap(const Tableau& tableau) {
    return tableau.degree() == 2 && !tableau.is_standard() && tableau[0].size() == tableau[1].size() &&
           tableau[0].is_standard() && tableau[1].is_standard() && row_leq(tableau[1], tableau[0]);
}

Tableau permute_tableau(const Permutation& sigma, const Tableau& tableau) {
    std::vector<Row> rows;
    rows.reserve(tableau.degree());
    for (const Row& row : tableau.rows()) {
        std::vector<int> entries = permute(sigma, row).values();
        std::sort(entries.begin(), entries.end());
        rows.emplace_back(std::move(entries));
    }
    return Tableau(std::move(rows));
}

bool is_compatible(const Permutation& sigma, const Tableau& tableau) {
    const CanonicalSplit split = canonical_split(tableau);
    const Tableau image = permute_tableau(sigma, tableau);
    if (image.is_standard()) return false;
    const CanonicalSplit image_split = canonical_split(image);
    auto sorted_image = [&](const Row& row) {
        std::vector<int> entries = permute(sigma, row).values();
        std::sort(entries.begin(), entries.end());
        return Row(std::move(entries));
    };
    const Row moved_tail = permute(sigma, split.bottom_tail);
    return image_split.r == split.r && moved_tail.is_standard() &&
           image_split.top_head == sorted_image(split.top_head) &&
           image_split.top_tail == sorted_image(split.top_tail) &&
           image_split.bottom_head == sorted_image(split.bottom_head) && image_split.bottom_tail == moved_tail;
}

// ---------------------------------------------------------------------------

std::string format_row(const Row& row, int n) {
    std::ostringstream out;
    for (std::size_t h = 0; h < row.size(); ++h) {
        if (n > 9 && h > 0) out << ' ';
        out << row[h];
    }
    return out.str();
}

Row parse_row(std::string_view text, int n) {
    text = trim(text);
    if (text.empty() || text == "∅") return Row{};
    std::vector<int> entries;
    const bool separated = text.find_first_of(" ,\t") != std::string_view::npos;
    if (!separated && n <= 9) {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw InputError("unexpected character '" + std::string(1, c) + "' in row");
            }
            entries.push_back(c - '0');
        }
    } else {
        std::string token;
        auto flush = [&] {
            if (token.empty()) return;
            for (char c : token) {
                if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("bad row token '" + token + "'");
            }
            if (token.size() > 6) throw InputError("row entry too large: " + token);
            entries.push_back(std::stoi(token));
            token.clear();
        };
        for (char c : text) {
            if (c == ' ' || c == ',' || c == '\t') {
                flush();
            } else {
                token.push_back(c);
            }
        }
        flush();
    }
    Row row(std::move(entries));
    check_alphabet(row, n);
    return row;
}

std::string format_tableau(const Tableau& tableau, int n) {
    std::string out;
    for (std::size_t i = 0; i < tableau.degree(); ++i) {
        if (i > 0) out += ';';
        out += format_row(tableau[i], n);
    }
    return out;
}

std::vector<Row> parse_row_list(std::string_view text, int n) {
    std::vector<Row> rows;
    std::size_t start = 0;
    while (true) {
        const std::size_t stop = text.find(';', start);
        rows.push_back(parse_row(text.substr(start, stop == std::string_view::npos ? std::string_view::npos : stop - start), n));
        if (stop == std::string_view::npos) break;
        start = stop + 1;
    }
    return rows;
}

Tableau parse_tableau(std::string_view text, int n) { return Tableau(parse_row_list(text, n)); }

void to_json(nlohmann::json& j, const Row& row) { j = row.values(); }

void from_json(const nlohmann::json& j, Row& row) {
    if (!j.is_array()) throw InputError("row must be a JSON array of integers");
    std::vector<int> entries;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InputError("row must be a JSON array of integers");
        entries.push_back(v.get<int>());
    }
    row = Row(std::move(entries));
}

void to_json(nlohmann::json& j, const Tableau& tableau) { j = nlohmann::json{{"rows", tableau.rows()}}; }

void from_json(const nlohmann::json& j, Tableau& tableau) {
    if (!j.is_object() || !j.contains("rows")) throw InputError("tableau JSON needs a \"rows\" array");
    std::vector<Row> rows;
    for (const auto& r : j.at("rows")) rows.push_back(r.get<Row>());
    tableau = Tableau(std::move(rows));
}

} // namespace pfshuffle
