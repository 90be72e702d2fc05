#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pfshuffle/bigint.hpp"
#include "pfshuffle/combinatorics.hpp"
#include "pfshuffle/formal_quadratic.hpp"

namespace pfshuffle {

/// Integer combination of basis vectors x(I), I standard.
class LinCombRows {
public:
    using TermMap = std::map<Row, Integer>;

    LinCombRows() = default;
    static LinCombRows basis(const Row& row, const Integer& c = 1);

    /// Adds c * x(row); unsorted rows pick up their sign, repeats vanish.
    void add(const Row& row, const Integer& c);
    Integer coefficient(const Row& standard_row) const;
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LinCombRows& operator+=(const LinCombRows& other);
    LinCombRows& operator-=(const LinCombRows& other);
    friend LinCombRows operator+(LinCombRows a, const LinCombRows& b) { return a += b; }
    friend LinCombRows operator-(LinCombRows a, const LinCombRows& b) { return a -= b; }
    friend bool operator==(const LinCombRows&, const LinCombRows&) = default;

    /// "x(13) - 2*x(∅)"; "0" when empty.
    std::string to_string(int n) const;

private:
    TermMap terms_;
};

/// Accepts a bare row ("23") or a combination "x(23) - 2*x(1)".
LinCombRows parse_lincomb(std::string_view text, int n);
/// {"terms": [{"row": [2,3], "coeff": "1"}, ...]}
nlohmann::json to_json_value(const LinCombRows& v);
LinCombRows lincomb_from_json(const nlohmann::json& j);

/// Twice the weight: +1 at the positions of I^0 and -1 elsewhere, length n+1.
struct Weight {
    std::vector<int> doubled;
    friend bool operator==(const Weight&, const Weight&) = default;
};

Weight weight(const Row& row, int n);
/// Doubled coordinates of the simple root alpha_i, i in 1..n+1:
/// eps_i - eps_{i+1} for i <= n and eps_n + eps_{n+1} for i = n+1.
Weight simple_root(int i, int n);
/// <h_i, wt>, using alpha_i = h_i and the standard form on C^{n+1}.
int pairing(int i, const Weight& w, int n);

/// The Chevalley generators on one basis vector; nullopt means zero.
std::optional<Row> raise_basis(int i, const Row& row, int n);
std::optional<Row> lower_basis(int i, const Row& row, int n);

/// Linear extensions. Throws InputError unless 1 <= i <= n+1.
LinCombRows apply_e(int i, const LinCombRows& v, int n);
LinCombRows apply_f(int i, const LinCombRows& v, int n);
/// h_i acts diagonally by <h_i, wt(I)>.
LinCombRows apply_h(int i, const LinCombRows& v, int n);

/// Derivation (Leibniz) extension to products: e(x(A)x(B)) = e(x(A))x(B) + x(A)e(x(B)).
FormalQuadratic apply_e(int i, const FormalQuadratic& f, int n);
FormalQuadratic apply_f(int i, const FormalQuadratic& f, int n);

} // namespace pfshuffle
