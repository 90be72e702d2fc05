#include "pfshuffle/formal_quadratic.hpp"

#include <cctype>
#include <sstream>

#include "pfshuffle/errors.hpp"
#include "pfshuffle/pfaffian.hpp"

namespace pfshuffle {

PairKey normalize_pair(Row a, Row b) {
    if (a.size() < b.size()) std::swap(a, b);
    if (a.size() == b.size()) {
        if (row_leq(a, b)) {
            // already standard
        } else if (row_leq(b, a)) {
            std::swap(a, b);
        } else if (a < b) {
            std::swap(a, b);
        }
    }
    return PairKey{std::move(a), std::move(b)};
}

void FormalQuadratic::add(const PairKey& key, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void FormalQuadratic::add(const Row& a, const Row& b, const Integer& c) {
    if (c == 0) return;
    const auto sa = sort_with_sign(a);
    const auto sb = sort_with_sign(b);
    if (!sa || !sb) return;
    add(normalize_pair(sa->row, sb->row), sa->sign * sb->sign == 1 ? Integer(c) : Integer(-c));
}

Integer FormalQuadratic::coefficient(const Row& a, const Row& b) const {
    const auto sa = sort_with_sign(a);
    const auto sb = sort_with_sign(b);
    if (!sa || !sb) return 0;
    auto it = terms_.find(normalize_pair(sa->row, sb->row));
    if (it == terms_.end()) return 0;
    return sa->sign * sb->sign == 1 ? it->second : Integer(-it->second);
}

FormalQuadratic& FormalQuadratic::operator+=(const FormalQuadratic& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
}

FormalQuadratic& FormalQuadratic::operator-=(const FormalQuadratic& other) {
    for (const auto& [k, c] : other.terms_) add(k, Integer(-c));
    return *this;
}

FormalQuadratic& FormalQuadratic::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

FormalQuadratic FormalQuadratic::transform_rows(const std::function<std::optional<Row>(const Row&)>& map) const {
    FormalQuadratic out;
    for (const auto& [k, c] : terms_) {
        const auto a = map(k.first);
        if (!a) continue;
        const auto b = map(k.second);
        if (!b) continue;
        out.add(*a, *b, c);
    }
    return out;
}

namespace {

std::string display_row(const Row& row, int n) { return row.empty() ? "∅" : format_row(row, n); }

} // namespace

std::string FormalQuadratic::to_string(int n) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        const Integer mag = abs(c);
        if (mag != 1) out << mag.get_str() << '*';
        out << "x(" << display_row(k.first, n) << '/' << display_row(k.second, n) << ')';
    }
    return out.str();
}

FormalQuadratic parse_formal_quadratic(std::string_view text, int n) {
    FormalQuadratic out;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_space();
    if (text.substr(pos) == "0") return out;
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
        const std::string_view inside = text.substr(open + 2, close - open - 2);
        const std::size_t slash = inside.find('/');
        if (slash == std::string_view::npos) throw InputError("term needs two rows separated by '/'");
        out.add(parse_row(inside.substr(0, slash), n), parse_row(inside.substr(slash + 1), n), coeff);
        pos = close + 1;
    }
    return out;
}

nlohmann::json to_json_value(const FormalQuadratic& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : f.terms()) {
        terms.push_back({{"rows", {k.first, k.second}}, {"coeff", c.get_str()}});
    }
    return nlohmann::json{{"terms", terms}};
}

FormalQuadratic formal_quadratic_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms")) throw InputError("formal quadratic JSON needs a \"terms\" array");
    FormalQuadratic out;
    for (const auto& term : j.at("terms")) {
        const auto& rows = term.at("rows");
        if (!rows.is_array() || rows.size() != 2) throw InputError("each term needs exactly two rows");
        out.add(rows.at(0).get<Row>(), rows.at(1).get<Row>(), Integer(term.at("coeff").get<std::string>(), 10));
    }
    return out;
}

SparsePoly pfaffian_substitute(const FormalQuadratic& f, PfaffianContext& ctx) {
    SparsePoly total = ctx.zero();
    for (const auto& [k, c] : f.terms()) {
        total += (ctx.pf_row(k.first) * ctx.pf_row(k.second)) * c;
    }
    return total;
}

} // namespace pfshuffle
