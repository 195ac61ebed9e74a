#ifndef HELLYCONE_RAINBOW_HPP
#define HELLYCONE_RAINBOW_HPP

#include <hellycone/cone.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace hellycone {

// Ordered list of color classes sharing one ambient dimension.
struct ColoredSystem {
    std::size_t ambient_dim = 0;
    std::vector<VectorSet> colors;

    ColoredSystem() = default;
    ColoredSystem(std::size_t d, std::vector<VectorSet> cs) : ambient_dim(d), colors(std::move(cs)) {
        if (colors.empty()) throw input_error("colored system: needs at least one color");
        for (const auto& c : colors) {
            if (c.ambient_dim != ambient_dim)
                throw input_error("colored system: color dimension mismatch");
            if (c.size() == 0) throw input_error("colored system: empty color");
        }
    }
};

// At most one pick per color; picks kept sorted by color index.
struct RainbowSelection {
    std::vector<std::pair<std::size_t, std::size_t>> picks;  // (color, index within color)

    std::size_t size() const { return picks.size(); }

    std::vector<Vec> vectors_in(const ColoredSystem& sys) const {
        std::vector<Vec> vs;
        vs.reserve(picks.size());
        for (const auto& [c, i] : picks) {
            if (c >= sys.colors.size() || i >= sys.colors[c].size())
                throw input_error("rainbow selection: pick out of range");
            vs.push_back(sys.colors[c].vectors[i]);
        }
        return vs;
    }

    bool operator==(const RainbowSelection& o) const { return picks == o.picks; }
};

inline bool origin_in_convex_hull(std::size_t d, const std::vector<Vec>& vs) {
    // sum lambda_i v_i = 0, sum lambda_i = 1, lambda >= 0
    Matrix a(vs.size());
    a.rows.assign(d + 1, Vec(vs.size(), Rational(0)));
    for (std::size_t j = 0; j < vs.size(); ++j) {
        for (std::size_t i = 0; i < d; ++i) a.rows[i][j] = vs[j][i];
        a.rows[d][j] = 1;
    }
    Vec rhs(d + 1, Rational(0));
    rhs[d] = 1;
    return feasible_nonneg(a, rhs).has_value();
}

// Colorful Caratheodory search at the origin: d+1 colors in R^d, each with
// 0 in its convex hull; returns the lexicographically first full rainbow
// selection whose convex hull contains 0.
inline RainbowSelection colorful_caratheodory_zero(const ColoredSystem& sys) {
    const std::size_t d = sys.ambient_dim;
    if (sys.colors.size() != d + 1)
        throw input_error("colorful_caratheodory_zero: needs exactly d+1 colors");
    for (std::size_t c = 0; c < sys.colors.size(); ++c) {
        if (!origin_in_convex_hull(d, sys.colors[c].vectors))
            throw input_error("colorful_caratheodory_zero: 0 not in conv of color " +
                              std::to_string(c));
    }
    // odometer over one pick per color, lexicographic
    std::vector<std::size_t> pick(sys.colors.size(), 0);
    for (;;) {
        std::vector<Vec> vs;
        for (std::size_t c = 0; c < pick.size(); ++c) vs.push_back(sys.colors[c].vectors[pick[c]]);
        if (origin_in_convex_hull(d, vs)) {
            RainbowSelection r;
            for (std::size_t c = 0; c < pick.size(); ++c) r.picks.emplace_back(c, pick[c]);
            return r;
        }
        std::size_t c = pick.size();
        while (c > 0) {
            --c;
            if (++pick[c] < sys.colors[c].size()) break;
            pick[c] = 0;
            if (c == 0) throw invariant_error(
                "no rainbow selection captures the origin despite per-color hypotheses");
        }
    }
}

// Nonempty rainbow sub-selection R that is a minimal positive basis of the
// minimal subspace pos R. Existence is the Caratheodory-at-0 pipeline
// (reduce colors to positive bases of their linealities, select a rainbow
// hull of 0, extract the minimal face); the output contract is the first
// hit in increasing size, then lexicographic colors, then picks.
inline std::pair<RainbowSelection, Subspace> rainbow_minimal_positive_basis(
    const ColoredSystem& sys) {
    const std::size_t d = sys.ambient_dim;
    if (sys.colors.size() != d + 1)
        throw input_error("rainbow_minimal_positive_basis: needs exactly d+1 colors");
    for (std::size_t c = 0; c < sys.colors.size(); ++c) {
        if (lineality_dim(sys.colors[c]) == 0)
            throw input_error("rainbow_minimal_positive_basis: color " + std::to_string(c) +
                              " has trivial lineality");
    }
    for (std::size_t s = 2; s <= d + 1; ++s) {
        RainbowSelection found;
        Subspace space;
        const bool hit =
            for_each_combination(sys.colors.size(), s, [&](const std::vector<std::size_t>& comb) {
                std::vector<std::size_t> pick(s, 0);
                for (;;) {
                    std::vector<Vec> vs;
                    for (std::size_t q = 0; q < s; ++q)
                        vs.push_back(sys.colors[comb[q]].vectors[pick[q]]);
                    bool distinct = true;
                    for (std::size_t i = 0; i < s && distinct; ++i)
                        for (std::size_t j = i + 1; j < s; ++j)
                            if (vs[i] == vs[j]) distinct = false;
                    if (distinct) {
                        auto [ok, sp] = is_minimal_positive_basis(VectorSet(d, vs));
                        if (ok) {
                            for (std::size_t q = 0; q < s; ++q)
                                found.picks.emplace_back(comb[q], pick[q]);
                            space = *sp;
                            return true;
                        }
                    }
                    std::size_t q = s;
                    bool done = true;
                    while (q > 0) {
                        --q;
                        if (++pick[q] < sys.colors[comb[q]].size()) {
                            done = false;
                            break;
                        }
                        pick[q] = 0;
                    }
                    if (done) return false;
                }
            });
        if (hit) return {found, space};
    }
    throw invariant_error("no rainbow minimal positive basis despite per-color lineality");
}

namespace detail {

// Reduce w against an echelon of previous rows; returns the residual.
inline Vec reduce_against(const std::vector<Vec>& echelon, const std::vector<std::size_t>& leads,
                          Vec w) {
    for (std::size_t r = 0; r < echelon.size(); ++r) {
        const std::size_t lead = leads[r];
        if (w[lead] == 0) continue;
        const Rational f = w[lead] / echelon[r][lead];
        for (std::size_t j = 0; j < w.size(); ++j) w[j] -= f * echelon[r][j];
    }
    return w;
}

}  // namespace detail

struct RainbowMpb {
    std::vector<std::size_t> color_indices;  // the index set I, sorted
    RainbowSelection selection;
    Subspace subspace;  // pos P(R)
};

// Maximal-cardinality index set I within `available` admitting a rainbow
// selection R (one pick per color of I) whose projection P(R) is a minimal
// positive basis of the minimal subspace pos P(R). Ties: lexicographically
// smallest I, then lexicographically smallest picks.
inline std::optional<RainbowMpb> max_cardinality_rainbow_mpb(
    const std::vector<std::size_t>& available, const ColoredSystem& sys, const Projector& p) {
    if (available.empty()) throw input_error("max_cardinality_rainbow_mpb: no available colors");
    const std::size_t d = sys.ambient_dim;
    const std::size_t range_dim = rank(p.matrix);
    const std::size_t smax = std::min(available.size(), range_dim + 1);

    for (std::size_t s = smax; s >= 2; --s) {
        std::optional<RainbowMpb> result;
        for_each_combination(available.size(), s, [&](const std::vector<std::size_t>& comb) {
            std::vector<std::size_t> colors;
            for (std::size_t q : comb) colors.push_back(available[q]);

            // DFS over one pick per color; the first s-1 projected picks must
            // stay independent, the last must close a strictly positive
            // dependence (that is exactly the minimal-positive-basis shape).
            std::vector<std::size_t> pick(s, 0);
            std::vector<Vec> echelon;
            std::vector<std::size_t> leads;
            std::vector<Vec> projected;

            std::function<bool(std::size_t)> dfs = [&](std::size_t depth) -> bool {
                const VectorSet& color = sys.colors[colors[depth]];
                for (std::size_t i = 0; i < color.size(); ++i) {
                    Vec w = p(color.vectors[i]);
                    if (depth + 1 < s) {
                        Vec res = detail::reduce_against(echelon, leads, w);
                        if (is_zero_vec(res)) continue;  // dependent prefix: prune
                        std::size_t lead = 0;
                        while (res[lead] == 0) ++lead;
                        echelon.push_back(std::move(res));
                        leads.push_back(lead);
                        projected.push_back(std::move(w));
                        pick[depth] = i;
                        if (dfs(depth + 1)) return true;
                        echelon.pop_back();
                        leads.pop_back();
                        projected.pop_back();
                    } else {
                        // last pick: w = sum c_t * projected_t with all c_t < 0
                        Matrix m(s - 1);
                        m.rows.assign(d, Vec(s - 1, Rational(0)));
                        for (std::size_t t = 0; t + 1 < s; ++t)
                            for (std::size_t r = 0; r < d; ++r) m.rows[r][t] = projected[t][r];
                        auto c = solve_linear(m, w);
                        if (!c) continue;  // independent: no dependence closes
                        bool all_neg = true;
                        for (const auto& x : *c)
                            if (x >= 0) {
                                all_neg = false;
                                break;
                            }
                        if (!all_neg) continue;
                        pick[depth] = i;
                        RainbowMpb out;
                        out.color_indices = colors;
                        for (std::size_t t = 0; t < s; ++t)
                            out.selection.picks.emplace_back(colors[t], pick[t]);
                        std::vector<Vec> span_gens = projected;
                        span_gens.push_back(w);
                        out.subspace = Subspace::span_of(d, std::move(span_gens));
                        result = std::move(out);
                        return true;
                    }
                }
                return false;
            };
            return dfs(0);
        });
        if (result) return result;
    }
    return std::nullopt;
}

}  // namespace hellycone

#endif  // HELLYCONE_RAINBOW_HPP
