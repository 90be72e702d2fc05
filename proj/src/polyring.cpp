#include "pfshuffle/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pfshuffle {

VarIndex::VarIndex(int i, int j) : i_(i), j_(j) {
    if (i < 1 || i >= j || j > 255) {
        throw InputError("variable x_" + std::to_string(i) + "," + std::to_string(j) + " needs 1 <= i < j");
    }
}

SparsePoly SparsePoly::constant(int dimension, const Integer& c) {
    SparsePoly p(dimension);
    if (c != 0) p.terms_.emplace(Monomial{}, c);
    return p;
}

SparsePoly SparsePoly::variable(int dimension, int i, int j) {
    if (j > dimension) throw InputError("variable index exceeds matrix dimension");
    SparsePoly p(dimension);
    p.terms_.emplace(Monomial{VarIndex(i, j).code()}, Integer(1));
    return p;
}

Integer SparsePoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

int SparsePoly::total_degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
}

void SparsePoly::add_term(Monomial m, const Integer& c) {
    if (c == 0) return;
    std::sort(m.begin(), m.end());
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void SparsePoly::check_same_context(const SparsePoly& other) const {
    if (dimension_ != other.dimension_) {
        throw InputError("polynomials over different matrix dimensions (" + std::to_string(dimension_) + " vs " +
                         std::to_string(other.dimension_) + ")");
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
    check_same_context(other);
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
    check_same_context(other);
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

SparsePoly& SparsePoly::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_same_context(b);
    SparsePoly out(a.dimension_);
    Monomial product;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            product.clear();
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(product));
            Integer c = ca * cb;
            auto [it, inserted] = out.terms_.try_emplace(product, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

bool SparsePoly::well_formed() const {
    for (const auto& [m, c] : terms_) {
        if (c == 0) return false;
        if (!std::is_sorted(m.begin(), m.end())) return false;
        for (auto code : m) {
            const int i = code / 256, j = code % 256;
            if (i < 1 || i >= j || j > dimension_) return false;
        }
    }
    return true;
}

std::string variable_name(VarIndex v, int dimension) {
    if (dimension <= 9) return "x" + std::to_string(v.i()) + std::to_string(v.j());
    return "x" + std::to_string(v.i()) + "_" + std::to_string(v.j());
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        const Integer mag = abs(c);
        if (m.empty()) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) out << mag.get_str() << '*';
        for (std::size_t k = 0; k < m.size();) {
            std::size_t run = k;
            while (run < m.size() && m[run] == m[k]) ++run;
            if (k > 0) out << '*';
            out << variable_name(VarIndex::from_code(m[k]), dimension_);
            if (run - k > 1) out << '^' << (run - k);
            k = run;
        }
    }
    return out.str();
}

namespace {

VarIndex parse_variable(std::string_view name, int dimension) {
    // name has the leading 'x' removed
    int i = 0, j = 0;
    const auto underscore = name.find('_');
    auto to_int = [](std::string_view digits) {
        if (digits.empty() || digits.size() > 3) throw InputError("bad variable index");
        int v = 0;
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("bad variable index");
            v = v * 10 + (c - '0');
        }
        return v;
    };
    if (underscore != std::string_view::npos) {
        i = to_int(name.substr(0, underscore));
        j = to_int(name.substr(underscore + 1));
    } else {
        if (name.size() != 2) throw InputError("variable name needs two digits or an underscore");
        i = to_int(name.substr(0, 1));
        j = to_int(name.substr(1, 1));
    }
    if (j > dimension) throw InputError("variable index exceeds matrix dimension");
    return VarIndex(i, j);
}

} // namespace

SparsePoly parse_poly(std::string_view text, int dimension) {
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    }
    SparsePoly out(dimension);
    if (compact.empty()) throw InputError("empty polynomial text");
    std::size_t pos = 0;
    while (pos < compact.size()) {
        int sign = 1;
        if (compact[pos] == '+' || compact[pos] == '-') {
            sign = compact[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw InputError("expected '+' or '-' in polynomial text");
        }
        const std::size_t end = compact.find_first_of("+-", pos);
        const std::string term = compact.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? compact.size() : end;
        if (term.empty()) throw InputError("empty term in polynomial text");
        Integer coeff = sign;
        Monomial m;
        std::size_t start = 0;
        while (start <= term.size()) {
            const std::size_t star = term.find('*', start);
            std::string factor = term.substr(start, star == std::string::npos ? std::string::npos : star - start);
            if (factor.empty()) throw InputError("empty factor in polynomial text");
            if (factor[0] == 'x') {
                int power = 1;
                const auto caret = factor.find('^');
                if (caret != std::string::npos) {
                    power = std::stoi(factor.substr(caret + 1));
                    factor = factor.substr(0, caret);
                }
                const auto v = parse_variable(std::string_view(factor).substr(1), dimension);
                for (int k = 0; k < power; ++k) m.push_back(v.code());
            } else {
                try {
                    coeff *= Integer(factor, 10);
                } catch (const std::invalid_argument&) {
                    throw InputError("bad coefficient '" + factor + "'");
                }
            }
            if (star == std::string::npos) break;
            start = star + 1;
        }
        out.add_term(std::move(m), coeff);
    }
    return out;
}

nlohmann::json poly_to_json(const SparsePoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json vars = nlohmann::json::array();
        for (auto code : m) {
            const auto v = VarIndex::from_code(code);
            vars.push_back({v.i(), v.j()});
        }
        terms.push_back({{"vars", vars}, {"coeff", c.get_str()}});
    }
    return terms;
}

SparsePoly poly_from_json(const nlohmann::json& j, int dimension) {
    if (!j.is_array()) throw InputError("polynomial JSON must be an array of terms");
    SparsePoly out(dimension);
    for (const auto& term : j) {
        Monomial m;
        for (const auto& v : term.at("vars")) {
            const VarIndex var(v.at(0).get<int>(), v.at(1).get<int>());
            if (var.j() > dimension) throw InputError("variable index exceeds matrix dimension");
            m.push_back(var.code());
        }
        out.add_term(std::move(m), Integer(term.at("coeff").get<std::string>(), 10));
    }
    return out;
}

SymbolicMatrix generic_matrix(int dimension) {
    SymbolicMatrix x(dimension, SparsePoly(dimension));
    for (int i = 1; i <= dimension; ++i) {
        for (int j = i + 1; j <= dimension; ++j) x.set(i, j, SparsePoly::variable(dimension, i, j));
    }
    return x;
}

Integer evaluate(const SparsePoly& p, const IntMatrix& x) {
    if (p.dimension() != x.dimension()) throw InputError("evaluation at a matrix of the wrong dimension");
    Integer total = 0;
    for (const auto& [m, c] : p.terms()) {
        Integer value = c;
        for (auto code : m) {
            const auto v = VarIndex::from_code(code);
            value *= x.upper(v.i(), v.j());
            if (value == 0) break;
        }
        total += value;
    }
    return total;
}

} // namespace pfshuffle
