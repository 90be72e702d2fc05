#include "pfshuffle/shuffle.hpp"

#include <algorithm>

#include "pfshuffle/errors.hpp"
#include "pfshuffle/qpoly.hpp"

namespace pfshuffle {

namespace {

Row intersect(const Row& a, const Row& b) {
    std::vector<int> out;
    for (int v : a) {
        if (b.contains(v)) out.push_back(v);
    }
    return Row(std::move(out));
}

Row minus(const Row& a, const Row& b) {
    std::vector<int> out;
    for (int v : a) {
        if (!b.contains(v)) out.push_back(v);
    }
    return Row(std::move(out));
}

Row sorted(const Row& row) {
    std::vector<int> v = row.values();
    std::sort(v.begin(), v.end());
    return Row(std::move(v));
}

bool subset_of(const Row& small, const Row& big) {
    return std::all_of(small.begin(), small.end(), [&](int v) { return big.contains(v); });
}

// Entries of `universe` selected (or not) by the bits of `mask`.
Row select(const Row& universe, std::uint32_t mask, bool selected) {
    std::vector<int> out;
    for (std::size_t k = 0; k < universe.size(); ++k) {
        if (static_cast<bool>(mask & (1u << k)) == selected) out.push_back(universe[k]);
    }
    return Row(std::move(out));
}

void check_rows(const Tableau& tableau, int n) {
    if (tableau.degree() != 2) throw ContractViolation("shuffling relation needs a two-row tableau");
    for (const Row& row : tableau.rows()) {
        check_alphabet(row, n);
        if (!row.is_standard()) throw ContractViolation("shuffling relation needs standard rows");
    }
    if (tableau.is_standard()) throw ContractViolation("shuffling relation of a standard tableau");
}

template <class Filter>
FormalQuadratic sum_terms(const Tableau& tableau, int n, Filter&& keep) {
    check_rows(tableau, n);
    FormalQuadratic out;
    if (is_pure_row_swap(tableau)) return out;
    const CanonicalSplit split = canonical_split(tableau);
    for (const ShuffleIndex& index : enumerate_index_set(split)) {
        if (!keep(index)) continue;
        const Integer coeff = shuffle_coefficient(split, index);
        if (coeff == 0) continue;
        const ShuffleTerm term = assemble_term(split, index);
        out.add(term.key, term.sign == 1 ? coeff : Integer(-coeff));
    }
    return out;
}

} // namespace

std::vector<ShuffleIndex> enumerate_index_set(const CanonicalSplit& split) {
    const Row& head = split.top_head;
    const Row& tail = split.top_tail;
    const Row& lower_head = split.bottom_head;
    const Row& lower_tail = split.bottom_tail;

    const Row z1 = intersect(head, lower_head);
    const Row z2 = intersect(tail, lower_tail);
    const Row universe = lower_head.concat(tail);
    if (universe.has_repeats()) throw ContractViolation("canonical split with a repeated entry in HJ");
    if (universe.size() > 30 || lower_tail.size() > 30) throw InputError("tableau too large to enumerate");

    const Row free_tail = minus(lower_tail, z2);

    std::vector<ShuffleIndex> out;
    const std::uint32_t universe_masks = 1u << universe.size();
    const std::uint32_t tail_masks = 1u << free_tail.size();
    for (std::uint32_t mask = 0; mask < universe_masks; ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) > lower_head.size()) continue;
        Row bottom_part = select(universe, mask, true);
        Row top_part = select(universe, mask, false);
        if (!subset_of(z1, bottom_part) || !subset_of(z2, top_part)) continue;
        bottom_part = sorted(bottom_part);
        top_part = sorted(top_part);
        const int deficit = static_cast<int>(lower_head.size() - bottom_part.size());
        for (std::uint32_t tmask = 0; tmask < tail_masks; ++tmask) {
            Row moved = select(free_tail, tmask, true);
            Row kept = minus(lower_tail, moved);
            out.push_back(ShuffleIndex{top_part, bottom_part, std::move(moved), std::move(kept), deficit});
        }
    }
    return out;
}

Integer shuffle_coefficient(const CanonicalSplit& split, const ShuffleIndex& index) {
    const int h = index.deficit;
    const int tail_only = static_cast<int>(minus(split.top_tail, split.bottom_tail).size());
    Integer value = gauss_binom_at_minus1(tail_only + h, h);
    if (value == 0) return value;
    if ((h * (h + 1) / 2) % 2 != 0) value = -value;
    const Row z2 = intersect(split.top_tail, split.bottom_tail);
    const int sign = inversion_sign(index.bottom_part.concat(index.top_part).entries()) *
                     inversion_sign(z2.concat(index.moved_tail).entries());
    if (sign < 0) value = -value;
    return value;
}

ShuffleTerm assemble_term(const CanonicalSplit& split, const ShuffleIndex& index) {
    const Row top = split.top_head.concat(index.top_part).concat(index.moved_tail);
    const Row bottom = index.bottom_part.concat(index.kept_tail);
    const auto sorted_top = sort_with_sign(top);
    const auto sorted_bottom = sort_with_sign(bottom);
    if (!sorted_top || !sorted_bottom) {
        throw std::logic_error("shuffling term with a repeated entry: (" + format_row(top, 99) + " / " +
                               format_row(bottom, 99) + ")");
    }
    return ShuffleTerm{normalize_pair(sorted_top->row, sorted_bottom->row), sorted_top->sign * sorted_bottom->sign};
}

FormalQuadratic shuffling_relation(const Tableau& tableau, int n) {
    return sum_terms(tableau, n, [](const ShuffleIndex&) { return true; });
}

FormalQuadratic truncated_shuffling_relation(const Tableau& tableau, int n) {
    return sum_terms(tableau, n, [](const ShuffleIndex& index) { return index.moved_tail.empty(); });
}

SparsePoly shuffling_relation_pf(const Tableau& tableau, PfaffianContext& ctx) {
    return pfaffian_substitute(shuffling_relation(tableau, ctx.rank()), ctx);
}

std::vector<Tableau> nonstandard_tableaux(int n, bool include_row_swaps) {
    const std::vector<Row> rows = standard_rows(n);
    std::vector<Tableau> out;
    for (const Row& top : rows) {
        for (const Row& bottom : rows) {
            if (top.size() < bottom.size()) continue;
            Tableau t(top, bottom);
            if (t.is_standard()) continue;
            if (!include_row_swaps && is_pure_row_swap(t)) continue;
            out.push_back(std::move(t));
        }
    }
    return out;
}

TruncationCounterexample truncated_relation_counterexample() {
    constexpr int n = 4;
    const Tableau t(Row{2, 3}, Row{1, 4});
    const Tableau companion(Row{2, 3, 4}, Row{1});
    TruncationCounterexample out{.full = shuffling_relation(t, n),
                                 .truncated = truncated_shuffling_relation(t, n),
                                 .companion = shuffling_relation(companion, n),
                                 .residual = {},
                                 .residual_pf = SparsePoly(n + 1)};
    out.residual = out.full - out.truncated - out.companion;
    PfaffianContext ctx(n);
    out.residual_pf = pfaffian_substitute(out.residual, ctx);
    out.residual_all_standard = std::all_of(out.residual.terms().begin(), out.residual.terms().end(),
                                            [](const auto& term) { return term.first.is_standard(); });
    out.residual_in_kernel = out.residual_pf.is_zero();
    return out;
}

} // namespace pfshuffle
