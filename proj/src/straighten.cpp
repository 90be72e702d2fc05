#include "pfshuffle/straighten.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <sstream>

#include "pfshuffle/errors.hpp"
#include "pfshuffle/shuffle.hpp"

namespace pfshuffle {

struct Straightener::Call {
    std::size_t steps = 0;
    std::vector<Row> chain; // first rows of the pairs being reduced, outermost first
    std::mt19937_64 rng;
};

namespace {

std::string render_chain(const std::vector<Row>& chain, int n) {
    std::string out;
    for (const Row& r : chain) {
        if (!out.empty()) out += " > ";
        out += r.empty() ? "∅" : format_row(r, n);
    }
    return out;
}

bool strictly_below(const Row& a, const Row& b) { return a != b && row_leq(a, b); }

} // namespace

Straightener::Straightener(int n, StraighteningOptions options) : n_(n), options_(options) {
    if (n < 1) throw InputError("rank n must be at least 1");
    if (options_.step_budget == 0) throw InputError("step budget must be positive");
}

std::size_t Straightener::memo_size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
}

const FormalQuadratic& Straightener::reduce(const PairKey& key, Call& call) const {
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    FormalQuadratic out;
    if (key.is_standard()) {
        out.add(key, 1);
    } else {
        std::vector<std::pair<Row, Row>> arrangements{{key.first, key.second}};
        if (key.first.size() == key.second.size()) arrangements.emplace_back(key.second, key.first);
        if (!call.chain.empty()) {
            std::erase_if(arrangements, [&](const auto& a) { return !strictly_below(a.first, call.chain.back()); });
        }
        if (arrangements.empty()) {
            throw StraighteningError("descent certificate violated at " + format_row(key.first, n_) + "/" +
                                         format_row(key.second, n_) + " below chain " +
                                         render_chain(call.chain, n_),
                                     {key.first, key.second}, render_chain(call.chain, n_));
        }
        std::size_t pick = 0;
        if (options_.order == ReductionOrder::randomized && arrangements.size() > 1) {
            pick = std::uniform_int_distribution<std::size_t>(0, arrangements.size() - 1)(call.rng);
        }
        const auto& [top, bottom] = arrangements[pick];
        if (++call.steps > options_.step_budget) {
            throw StraighteningError("step budget of " + std::to_string(options_.step_budget) + " exceeded",
                                     {top, bottom}, render_chain(call.chain, n_));
        }
        const FormalQuadratic theta = shuffling_relation(Tableau(top, bottom), n_);
        if (theta.coefficient(top, bottom) != 1) {
            throw std::logic_error("shuffling relation without unit leading coefficient");
        }
        call.chain.push_back(top);
        for (const auto& [term, c] : theta.terms()) {
            if (term == key) continue;
            FormalQuadratic part = reduce(term, call);
            part *= Integer(-c);
            out += part;
        }
        call.chain.pop_back();
    }
    std::unique_lock lock(mutex_);
    return memo_.try_emplace(key, std::move(out)).first->second;
}

StraighteningResult Straightener::straighten_pair(const Row& a, const Row& b) const {
    check_alphabet(a, n_);
    check_alphabet(b, n_);
    FormalQuadratic input;
    input.add(a, b, 1);
    return straighten(input);
}

StraighteningResult Straightener::straighten(const FormalQuadratic& f) const {
    Call call{.steps = 0, .chain = {}, .rng = std::mt19937_64(options_.seed)};
    StraighteningResult result;
    for (const auto& [key, c] : f.terms()) {
        FormalQuadratic part = reduce(key, call);
        part *= c;
        result.expansion += part;
    }
    result.steps = call.steps;
    return result;
}

bool is_standard_monomial(const std::vector<Row>& sorted_rows) {
    for (std::size_t i = 1; i < sorted_rows.size(); ++i) {
        if (!row_leq(sorted_rows[i - 1], sorted_rows[i])) return false;
    }
    return true;
}

std::optional<std::pair<std::vector<Row>, int>> canonical_monomial(const std::vector<Row>& rows) {
    std::vector<Row> out;
    out.reserve(rows.size());
    int sign = 1;
    for (const Row& r : rows) {
        auto s = sort_with_sign(r);
        if (!s) return std::nullopt;
        sign *= s->sign;
        out.push_back(std::move(s->row));
    }
    std::sort(out.begin(), out.end());
    return std::make_pair(std::move(out), sign);
}

MonomialResult Straightener::straighten_monomial(const std::vector<Row>& rows) const {
    if (rows.empty()) throw InputError("a monomial needs at least one row");
    for (const Row& r : rows) check_alphabet(r, n_);

    MonomialResult result;
    const auto start = canonical_monomial(rows);
    if (!start) return result;

    Call call{.steps = 0, .chain = {}, .rng = std::mt19937_64(options_.seed)};
    MonomialExpansion pending;
    pending.emplace(start->first, Integer(start->second));
    std::size_t passes = 0;

    auto add = [](MonomialExpansion& e, const std::vector<Row>& m, const Integer& c) {
        if (c == 0) return;
        auto [it, inserted] = e.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) e.erase(it);
        }
    };

    while (!pending.empty()) {
        auto it = pending.begin();
        if (options_.order == ReductionOrder::randomized && pending.size() > 1) {
            std::advance(it, std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(call.rng));
        }
        const std::vector<Row> monomial = it->first;
        const Integer coeff = it->second;
        pending.erase(it);

        std::vector<std::size_t> bad;
        for (std::size_t i = 1; i < monomial.size(); ++i) {
            if (!row_leq(monomial[i - 1], monomial[i])) bad.push_back(i - 1);
        }
        if (bad.empty()) {
            add(result.expansion, monomial, coeff);
            continue;
        }
        if (++passes > options_.step_budget) {
            std::ostringstream state;
            state << to_string(pending, n_);
            throw StraighteningError("step budget of " + std::to_string(options_.step_budget) +
                                         " exceeded while straightening a monomial",
                                     monomial, state.str());
        }
        std::size_t i = bad.front();
        if (options_.order == ReductionOrder::randomized) {
            i = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(call.rng)];
        }
        const FormalQuadratic& pair = reduce(normalize_pair(monomial[i], monomial[i + 1]), call);
        if (call.steps > options_.step_budget) {
            throw StraighteningError("step budget exceeded", monomial, to_string(pending, n_));
        }
        for (const auto& [key, c] : pair.terms()) {
            std::vector<Row> next = monomial;
            next[i] = key.first;
            next[i + 1] = key.second;
            std::sort(next.begin(), next.end());
            add(pending, next, coeff * c);
        }
    }
    result.steps = call.steps;
    return result;
}

std::string to_string(const MonomialExpansion& e, int n) {
    if (e.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [rows, c] : e) {
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        const Integer mag = abs(c);
        if (mag != 1) out << mag.get_str() << '*';
        out << "x(";
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k) out << '/';
            out << (rows[k].empty() ? "∅" : format_row(rows[k], n));
        }
        out << ')';
    }
    return out.str();
}

nlohmann::json monomial_expansion_to_json(const MonomialExpansion& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [rows, c] : e) terms.push_back({{"rows", rows}, {"coeff", c.get_str()}});
    return nlohmann::json{{"terms", terms}};
}

MonomialExpansion monomial_expansion_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms")) throw InputError("expansion JSON needs a \"terms\" array");
    MonomialExpansion out;
    for (const auto& term : j.at("terms")) {
        const auto rows = term.at("rows").get<std::vector<Row>>();
        const auto canon = canonical_monomial(rows);
        if (!canon) continue;
        Integer c(term.at("coeff").get<std::string>(), 10);
        if (canon->second < 0) c = -c;
        out[canon->first] += c;
        if (out[canon->first] == 0) out.erase(canon->first);
    }
    return out;
}

MonomialExpansion to_monomial_expansion(const FormalQuadratic& f) {
    MonomialExpansion out;
    for (const auto& [key, c] : f.terms()) {
        std::vector<Row> rows{key.first, key.second};
        std::sort(rows.begin(), rows.end());
        out[rows] += c;
    }
    return out;
}

SparsePoly monomial_pf(const std::vector<Row>& rows, PfaffianContext& ctx) {
    SparsePoly out = ctx.one();
    for (const Row& r : rows) out = out * ctx.pf_row(r);
    return out;
}

SparsePoly expansion_pf(const MonomialExpansion& e, PfaffianContext& ctx) {
    SparsePoly total = ctx.zero();
    for (const auto& [rows, c] : e) total += monomial_pf(rows, ctx) * c;
    return total;
}

} // namespace pfshuffle
