#include "pfshuffle/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "pfshuffle/errors.hpp"
#include "pfshuffle/parallel.hpp"
#include "pfshuffle/shuffle.hpp"

namespace pfshuffle {

namespace {

using Dense = std::vector<std::vector<Integer>>;

void check_bound(int n, const OracleConfig& config) {
    if (n < 1) throw InputError("rank n must be at least 1");
    if (n > config.bound && !config.allow_large) {
        throw InputError("oracle refuses n = " + std::to_string(n) + " above the bound " +
                         std::to_string(config.bound) + " without the override");
    }
}

std::vector<int> content(const PairKey& key, int n) {
    std::vector<int> c(static_cast<std::size_t>(n + 2), 0);
    for (int v : complete_even(key.first, n)) ++c[static_cast<std::size_t>(v)];
    for (int v : complete_even(key.second, n)) ++c[static_cast<std::size_t>(v)];
    return c;
}

/// Fraction-free elimination to row echelon form in place; returns pivot
/// columns. Every division is exact.
std::vector<std::size_t> bareiss_echelon(Dense& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t rows = a.size();
    const std::size_t cols = a.front().size();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(v);
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Dense block of the matrix: rows = block rows, columns = the block's own
/// columns in increasing order.
Dense dense_block(const RelationMatrix& m, const std::vector<std::size_t>& block, std::vector<std::size_t>& cols) {
    cols.clear();
    for (std::size_t i : block) {
        for (const auto& [c, v] : m.rows[i]) cols.push_back(c);
    }
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    Dense out(block.size(), std::vector<Integer>(cols.size(), Integer(0)));
    for (std::size_t r = 0; r < block.size(); ++r) {
        for (const auto& [c, v] : m.rows[block[r]]) {
            const auto pos = std::lower_bound(cols.begin(), cols.end(), c) - cols.begin();
            out[r][static_cast<std::size_t>(pos)] = v;
        }
    }
    return out;
}

/// Nullspace of an echelon matrix u (pivot columns given), one primitive
/// integer vector per free column.
std::vector<std::vector<Integer>> echelon_nullspace(const Dense& u, const std::vector<std::size_t>& pivots,
                                                    std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Integer>> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[f] = 1;
        for (std::size_t k = pivots.size(); k-- > 0;) {
            const std::size_t p = pivots[k];
            Rational s = 0;
            for (std::size_t j = p + 1; j < cols; ++j) {
                if (x[j] != 0 && u[k][j] != 0) s += Rational(u[k][j]) * x[j];
            }
            x[p] = -s / Rational(u[k][p]);
            x[p].canonicalize();
        }
        Integer denom_lcm = 1;
        for (const Rational& v : x) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), v.get_den_mpz_t());
        std::vector<Integer> v(cols);
        Integer g = 0;
        for (std::size_t j = 0; j < cols; ++j) {
            Rational scaled = x[j] * Rational(denom_lcm);
            scaled.canonicalize();
            v[j] = scaled.get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[j].get_mpz_t());
        }
        const auto first = std::find_if(v.begin(), v.end(), [](const Integer& e) { return e != 0; });
        if (first != v.end() && *first < 0) g = -g;
        for (Integer& e : v) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

std::size_t RelationMatrix::index_of(const PairKey& key) const {
    auto it = lookup.find(key);
    if (it == lookup.end()) throw InputError("pair is not a row of the relation matrix");
    return it->second;
}

RelationMatrix build_relation_matrix(int n, PfaffianContext& ctx, const OracleConfig& config) {
    check_bound(n, config);
    if (ctx.rank() != n) throw InputError("pfaffian context rank does not match n");
    RelationMatrix m;
    m.n = n;
    const std::vector<Row> rows = standard_rows(n);
    for (std::size_t a = 0; a < rows.size(); ++a) {
        for (std::size_t b = a; b < rows.size(); ++b) m.pairs.push_back(normalize_pair(rows[a], rows[b]));
    }
    std::sort(m.pairs.begin(), m.pairs.end());
    for (std::size_t i = 0; i < m.pairs.size(); ++i) m.lookup.emplace(m.pairs[i], i);

    std::vector<SparsePoly> products(m.pairs.size(), SparsePoly(n + 1));
    parallel_for(m.pairs.size(), config.threads, [&](std::size_t i) {
        products[i] = ctx.pf_row(m.pairs[i].first) * ctx.pf_row(m.pairs[i].second);
    });

    std::map<Monomial, std::size_t, MonomialOrder> column_index;
    for (const SparsePoly& p : products) {
        for (const auto& [mono, c] : p.terms()) column_index.try_emplace(mono, 0);
    }
    std::size_t next = 0;
    for (auto& [mono, idx] : column_index) {
        idx = next++;
        m.columns.push_back(mono);
    }
    m.rows.resize(m.pairs.size());
    for (std::size_t i = 0; i < m.pairs.size(); ++i) {
        for (const auto& [mono, c] : products[i].terms()) m.rows[i].emplace_back(column_index.at(mono), c);
        std::sort(m.rows[i].begin(), m.rows[i].end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    }

    std::map<std::vector<int>, std::vector<std::size_t>> by_content;
    for (std::size_t i = 0; i < m.pairs.size(); ++i) by_content[content(m.pairs[i], n)].push_back(i);
    for (auto& [c, block] : by_content) m.blocks.push_back(std::move(block));
    return m;
}

std::size_t bareiss_rank(std::vector<std::vector<Integer>> a) { return bareiss_echelon(a).size(); }

std::size_t matrix_rank(const RelationMatrix& m) {
    std::size_t rank = 0;
    std::vector<std::size_t> cols;
    for (const auto& block : m.blocks) rank += bareiss_rank(dense_block(m, block, cols));
    return rank;
}

bool in_kernel(const RelationMatrix& m, const FormalQuadratic& v) {
    std::map<std::size_t, Integer> residual;
    for (const auto& [key, c] : v.terms()) {
        for (const auto& [col, entry] : m.rows[m.index_of(key)]) residual[col] += c * entry;
    }
    return std::all_of(residual.begin(), residual.end(), [](const auto& e) { return e.second == 0; });
}

std::vector<FormalQuadratic> kernel_basis(const RelationMatrix& m) {
    std::vector<FormalQuadratic> out;
    std::vector<std::size_t> cols;
    for (const auto& block : m.blocks) {
        const Dense d = dense_block(m, block, cols);
        Dense t(cols.size(), std::vector<Integer>(block.size(), Integer(0)));
        for (std::size_t r = 0; r < block.size(); ++r) {
            for (std::size_t c = 0; c < cols.size(); ++c) t[c][r] = d[r][c];
        }
        const std::vector<std::size_t> pivots = bareiss_echelon(t);
        for (const auto& v : echelon_nullspace(t, pivots, block.size())) {
            FormalQuadratic f;
            for (std::size_t r = 0; r < block.size(); ++r) f.add(m.pairs[block[r]], v[r]);
            if (!in_kernel(m, f)) throw std::logic_error("nullspace vector fails the residual check");
            out.push_back(std::move(f));
        }
    }
    std::size_t rank = matrix_rank(m);
    if (rank + out.size() != m.row_count()) throw std::logic_error("rank plus nullity differs from the row count");
    return out;
}

std::size_t family_rank(const RelationMatrix& m, const std::vector<FormalQuadratic>& family) {
    // Content is preserved by every relation term, so each vector stays inside
    // one block unless it mixes blocks; the general path handles both.
    std::vector<std::size_t> block_of(m.row_count());
    for (std::size_t b = 0; b < m.blocks.size(); ++b) {
        for (std::size_t i : m.blocks[b]) block_of[i] = b;
    }
    std::map<std::size_t, std::vector<const FormalQuadratic*>> grouped;
    std::vector<const FormalQuadratic*> mixed;
    for (const FormalQuadratic& f : family) {
        if (f.is_zero()) continue;
        std::size_t b = block_of[m.index_of(f.terms().begin()->first)];
        bool single = std::all_of(f.terms().begin(), f.terms().end(),
                                  [&](const auto& t) { return block_of[m.index_of(t.first)] == b; });
        if (single) {
            grouped[b].push_back(&f);
        } else {
            mixed.push_back(&f);
        }
    }
    auto rank_of = [&](const std::vector<const FormalQuadratic*>& members, const std::vector<std::size_t>& support) {
        Dense d(members.size(), std::vector<Integer>(support.size(), Integer(0)));
        for (std::size_t r = 0; r < members.size(); ++r) {
            for (const auto& [key, c] : members[r]->terms()) {
                const std::size_t idx = m.index_of(key);
                const auto pos = std::lower_bound(support.begin(), support.end(), idx) - support.begin();
                d[r][static_cast<std::size_t>(pos)] = c;
            }
        }
        return bareiss_rank(std::move(d));
    };
    if (!mixed.empty()) {
        std::vector<const FormalQuadratic*> all;
        for (const FormalQuadratic& f : family) all.push_back(&f);
        std::vector<std::size_t> support(m.row_count());
        std::iota(support.begin(), support.end(), 0);
        return rank_of(all, support);
    }
    std::size_t rank = 0;
    for (const auto& [b, members] : grouped) {
        std::vector<std::size_t> support = m.blocks[b];
        std::sort(support.begin(), support.end());
        rank += rank_of(members, support);
    }
    return rank;
}

SpanReport span_equals_kernel(int n, PfaffianContext& ctx, const OracleConfig& config) {
    const RelationMatrix m = build_relation_matrix(n, ctx, config);
    SpanReport report;
    report.n = n;
    report.pairs = m.row_count();
    report.rank = matrix_rank(m);
    report.kernel_dim = m.row_count() - report.rank;

    const std::vector<Tableau> tableaux = nonstandard_tableaux(n, true);
    std::vector<FormalQuadratic> thetas(tableaux.size());
    parallel_for(tableaux.size(), config.threads,
                 [&](std::size_t i) { thetas[i] = shuffling_relation(tableaux[i], n); });
    report.theta_count = thetas.size();
    report.all_theta_vanish = std::all_of(thetas.begin(), thetas.end(), [&](const auto& t) { return in_kernel(m, t); });
    report.theta_rank = family_rank(m, thetas);
    report.span_ok = report.all_theta_vanish && report.theta_rank == report.kernel_dim;
    return report;
}

IndependenceReport standard_monomial_independence(int n, int degree, PfaffianContext& ctx,
                                                  const OracleConfig& config) {
    check_bound(n, config);
    IndependenceReport report;
    report.n = n;
    report.degree = degree;
    std::vector<SparsePoly> polys;
    if (degree == 1) {
        for (const Row& r : standard_rows(n)) polys.push_back(ctx.pf_row(r));
        report.total = std::size_t{1} << n;
    } else if (degree == 2) {
        const std::vector<Row> rows = standard_rows(n);
        std::vector<PairKey> standard;
        for (const Row& a : rows) {
            for (const Row& b : rows) {
                if (row_leq(a, b)) standard.push_back(PairKey{a, b});
            }
        }
        polys.assign(standard.size(), SparsePoly(n + 1));
        parallel_for(standard.size(), config.threads, [&](std::size_t i) {
            polys[i] = ctx.pf_row(standard[i].first) * ctx.pf_row(standard[i].second);
        });
        report.total = pair_count(n);
        const RelationMatrix m = build_relation_matrix(n, ctx, config);
        report.kernel_dim = m.row_count() - matrix_rank(m);
    } else {
        throw InputError("independence is checked in degree 1 or 2 only");
    }
    report.count = polys.size();

    std::map<Monomial, std::size_t, MonomialOrder> column_index;
    for (const SparsePoly& p : polys) {
        for (const auto& [mono, c] : p.terms()) column_index.try_emplace(mono, column_index.size());
    }
    Dense d(polys.size(), std::vector<Integer>(column_index.size(), Integer(0)));
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (const auto& [mono, c] : polys[i].terms()) d[i][column_index.at(mono)] = c;
    }
    report.rank = bareiss_rank(std::move(d));
    report.independent = report.rank == report.count;
    report.count_ok = degree == 1 ? report.count == report.total : report.count + report.kernel_dim == report.total;
    return report;
}

std::size_t count_standard_pairs(int n) {
    const std::vector<Row> rows = standard_rows(n);
    std::size_t count = 0;
    for (const Row& a : rows) {
        for (const Row& b : rows) count += row_leq(a, b) ? 1 : 0;
    }
    return count;
}

std::size_t pair_count(int n) {
    const std::size_t rows = std::size_t{1} << n;
    return rows * (rows + 1) / 2;
}

void to_json(nlohmann::json& j, const SpanReport& r) {
    j = nlohmann::json{{"n", r.n},
                       {"pairs", r.pairs},
                       {"rank", r.rank},
                       {"kernel_dim", r.kernel_dim},
                       {"theta_count", r.theta_count},
                       {"theta_rank", r.theta_rank},
                       {"all_theta_vanish", r.all_theta_vanish},
                       {"span_ok", r.span_ok}};
}

void to_json(nlohmann::json& j, const IndependenceReport& r) {
    j = nlohmann::json{{"n", r.n},         {"degree", r.degree},         {"count", r.count},
                       {"rank", r.rank},   {"kernel_dim", r.kernel_dim}, {"total", r.total},
                       {"independent", r.independent}, {"count_ok", r.count_ok}};
}

} // namespace pfshuffle
