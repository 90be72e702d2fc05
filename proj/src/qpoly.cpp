#include "pfshuffle/qpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "pfshuffle/errors.hpp"

namespace pfshuffle {

QPoly::QPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

QPoly QPoly::constant(const Integer& c) { return QPoly(std::vector<Integer>{c}); }

QPoly QPoly::monomial(const Integer& c, int exponent) {
    if (exponent < 0) throw InputError("negative exponent in QPoly::monomial");
    std::vector<Integer> coeffs(static_cast<std::size_t>(exponent) + 1, Integer(0));
    coeffs.back() = c;
    return QPoly(std::move(coeffs));
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer QPoly::coefficient(int exponent) const {
    if (exponent < 0 || exponent > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent)];
}

Integer QPoly::evaluate(const Integer& q) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

QPoly& QPoly::operator+=(const QPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Integer> out(coeffs_.size() + other.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

QPoly operator*(const Integer& c, const QPoly& p) {
    std::vector<Integer> out = p.coeffs_;
    for (auto& v : out) v *= c;
    return QPoly(std::move(out));
}

QPoly QPoly::operator-() const { return Integer(-1) * *this; }

QPoly QPoly::shifted(int exponent) const {
    if (is_zero()) return {};
    std::vector<Integer> out(static_cast<std::size_t>(exponent), Integer(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return QPoly(std::move(out));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const {
    if (divisor.is_zero()) throw InputError("QPoly division by zero");
    const Integer& lead = divisor.coeffs_.back();
    if (abs(lead) != 1) throw InputError("QPoly divisor must have leading coefficient +-1");
    std::vector<Integer> rem = coeffs_;
    const int dd = divisor.degree();
    const int qd = degree() - dd;
    if (qd < 0) return {QPoly{}, *this};
    std::vector<Integer> quot(static_cast<std::size_t>(qd) + 1, Integer(0));
    for (int i = qd; i >= 0; --i) {
        const Integer c = rem[static_cast<std::size_t>(i + dd)] * lead; // lead is its own inverse
        quot[static_cast<std::size_t>(i)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        const Integer& c = coeffs_[e];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) out << mag.get_str() << '*';
        out << 'q';
        if (e > 1) out << '^' << e;
    }
    return out.str();
}

// ---------------------------------------------------------------------------

QPoly gauss_binom(int m, int k) {
    if (k < 0 || m < 0 || k > m) return {};
    if (k == 0 || k == m) return QPoly::constant(1);

    static std::mutex mutex;
    static std::map<std::pair<int, int>, QPoly> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find({m, k}); it != memo.end()) return it->second;
    }
    // [m,k] = [m-1,k-1] + q^k [m-1,k]
    QPoly value = gauss_binom(m - 1, k - 1) + gauss_binom(m - 1, k).shifted(k);
    std::lock_guard lock(mutex);
    return memo.emplace(std::pair{m, k}, std::move(value)).first->second;
}

Integer binomial(int m, int k) {
    if (k < 0 || m < 0 || k > m) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    return out;
}

Integer gauss_binom_at_minus1(int m, int k) {
    if (k < 0 || m < 0 || k > m) return 0;
    if (m % 2 == 0 && k % 2 == 1) return 0;
    return binomial(m / 2, k / 2);
}

QPoly alternating_sum(int m, int s) {
    if (s < 1 || s > m) {
        throw InputError("alternating identity needs 1 <= s <= m, got m=" + std::to_string(m) + " s=" + std::to_string(s));
    }
    QPoly sum;
    for (int h = 0; h <= s; ++h) {
        QPoly term = (gauss_binom(m, s - h) * gauss_binom(m - s + h, h)).shifted(h * (h - 1) / 2);
        if (h % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

bool check_alternating_identity(int m, int s) { return alternating_sum(m, s).is_zero(); }

} // namespace pfshuffle
