#include "pfshuffle/spinaction.hpp"

#include <cctype>
#include <sstream>

#include "pfshuffle/errors.hpp"

namespace pfshuffle {

LinCombRows LinCombRows::basis(const Row& row, const Integer& c) {
    LinCombRows v;
    v.add(row, c);
    return v;
}

void LinCombRows::add(const Row& row, const Integer& c) {
    if (c == 0) return;
    const auto sorted = sort_with_sign(row);
    if (!sorted) return;
    const Integer value = sorted->sign == 1 ? Integer(c) : Integer(-c);
    auto [it, inserted] = terms_.try_emplace(sorted->row, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer LinCombRows::coefficient(const Row& standard_row) const {
    auto it = terms_.find(standard_row);
    return it == terms_.end() ? Integer(0) : it->second;
}

LinCombRows& LinCombRows::operator+=(const LinCombRows& other) {
    for (const auto& [r, c] : other.terms_) add(r, c);
    return *this;
}

LinCombRows& LinCombRows::operator-=(const LinCombRows& other) {
    for (const auto& [r, c] : other.terms_) add(r, Integer(-c));
    return *this;
}

std::string LinCombRows::to_string(int n) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [r, c] : terms_) {
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        const Integer mag = abs(c);
        if (mag != 1) out << mag.get_str() << '*';
        out << "x(" << (r.empty() ? std::string("∅") : format_row(r, n)) << ')';
    }
    return out.str();
}

LinCombRows parse_lincomb(std::string_view text, int n) {
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    if (text.find("x(") == std::string_view::npos) {
        std::string_view trimmed = text;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
        if (trimmed == "0") return {};
        return LinCombRows::basis(parse_row(text, n));
    }
    LinCombRows out;
    bool first = true;
    while (true) {
        skip_space();
        if (pos >= text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_space();
        } else if (!first) {
            throw InputError("expected '+' or '-' between terms");
        }
        first = false;
        Integer coeff = sign;
        const std::size_t open = text.find("x(", pos);
        if (open == std::string_view::npos) throw InputError("expected x(...) term");
        std::string prefix(text.substr(pos, open - pos));
        while (!prefix.empty() && std::isspace(static_cast<unsigned char>(prefix.back()))) prefix.pop_back();
        if (!prefix.empty()) {
            if (prefix.back() != '*') throw InputError("coefficient must be followed by '*'");
            prefix.pop_back();
            try {
                coeff *= Integer(prefix, 10);
            } catch (const std::invalid_argument&) {
                throw InputError("bad coefficient '" + prefix + "'");
            }
        }
        const std::size_t close = text.find(')', open);
        if (close == std::string_view::npos) throw InputError("unterminated x(...) term");
        out.add(parse_row(text.substr(open + 2, close - open - 2), n), coeff);
        pos = close + 1;
    }
    return out;
}

nlohmann::json to_json_value(const LinCombRows& v) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [r, c] : v.terms()) terms.push_back({{"row", r}, {"coeff", c.get_str()}});
    return nlohmann::json{{"terms", terms}};
}

LinCombRows lincomb_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms")) throw InputError("vector JSON needs a \"terms\" array");
    LinCombRows out;
    for (const auto& term : j.at("terms")) {
        out.add(term.at("row").get<Row>(), Integer(term.at("coeff").get<std::string>(), 10));
    }
    return out;
}

// ---------------------------------------------------------------------------

Weight weight(const Row& row, int n) {
    const Row completed = complete_even(row, n);
    Weight w{std::vector<int>(static_cast<std::size_t>(n + 1), -1)};
    for (int v : completed) w.doubled[static_cast<std::size_t>(v - 1)] = 1;
    return w;
}

namespace {

void check_generator(int i, int n) {
    if (i < 1 || i > n + 1) {
        throw InputError("generator index " + std::to_string(i) + " outside 1.." + std::to_string(n + 1));
    }
}

} // namespace

Weight simple_root(int i, int n) {
    check_generator(i, n);
    Weight w{std::vector<int>(static_cast<std::size_t>(n + 1), 0)};
    if (i <= n) {
        w.doubled[static_cast<std::size_t>(i - 1)] = 2;
        w.doubled[static_cast<std::size_t>(i)] = -2;
    } else {
        w.doubled[static_cast<std::size_t>(n - 1)] = 2;
        w.doubled[static_cast<std::size_t>(n)] = 2;
    }
    return w;
}

int pairing(int i, const Weight& w, int n) {
    const Weight root = simple_root(i, n);
    int dot = 0;
    for (std::size_t k = 0; k < w.doubled.size(); ++k) dot += root.doubled[k] * w.doubled[k];
    return dot / 4;
}

std::optional<Row> raise_basis(int i, const Row& row, int n) {
    check_generator(i, n);
    if (i < n) {
        if (row.contains(i + 1) && !row.contains(i)) {
            std::vector<int> entries = row.values();
            for (int& v : entries) {
                if (v == i + 1) v = i;
            }
            return Row(std::move(entries));
        }
        return std::nullopt;
    }
    const bool odd = row.size() % 2 == 1;
    if (row.contains(n)) return std::nullopt;
    if ((i == n && odd) || (i == n + 1 && !odd)) return row.concat(Row{n});
    return std::nullopt;
}

std::optional<Row> lower_basis(int i, const Row& row, int n) {
    check_generator(i, n);
    if (i < n) {
        if (row.contains(i) && !row.contains(i + 1)) {
            std::vector<int> entries = row.values();
            for (int& v : entries) {
                if (v == i) v = i + 1;
            }
            return Row(std::move(entries));
        }
        return std::nullopt;
    }
    const bool odd = row.size() % 2 == 1;
    if (!row.contains(n)) return std::nullopt;
    if ((i == n && !odd) || (i == n + 1 && odd)) return delete_entry(row, n);
    return std::nullopt;
}

LinCombRows apply_e(int i, const LinCombRows& v, int n) {
    check_generator(i, n);
    LinCombRows out;
    for (const auto& [r, c] : v.terms()) {
        if (auto image = raise_basis(i, r, n)) out.add(*image, c);
    }
    return out;
}

LinCombRows apply_f(int i, const LinCombRows& v, int n) {
    check_generator(i, n);
    LinCombRows out;
    for (const auto& [r, c] : v.terms()) {
        if (auto image = lower_basis(i, r, n)) out.add(*image, c);
    }
    return out;
}

LinCombRows apply_h(int i, const LinCombRows& v, int n) {
    check_generator(i, n);
    LinCombRows out;
    for (const auto& [r, c] : v.terms()) out.add(r, c * pairing(i, weight(r, n), n));
    return out;
}

namespace {

template <class BasisMap>
FormalQuadratic leibniz(const FormalQuadratic& f, BasisMap&& map) {
    FormalQuadratic out;
    for (const auto& [k, c] : f.terms()) {
        if (auto a = map(k.first)) out.add(*a, k.second, c);
        if (auto b = map(k.second)) out.add(k.first, *b, c);
    }
    return out;
}

} // namespace

FormalQuadratic apply_e(int i, const FormalQuadratic& f, int n) {
    check_generator(i, n);
    return leibniz(f, [&](const Row& r) { return raise_basis(i, r, n); });
}

FormalQuadratic apply_f(int i, const FormalQuadratic& f, int n) {
    check_generator(i, n);
    return leibniz(f, [&](const Row& r) { return lower_basis(i, r, n); });
}

} // namespace pfshuffle
