#ifndef HELLYCONE_VERIFY_HPP
#define HELLYCONE_VERIFY_HPP

#include <hellycone/rainbow.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hellycone {

// Helly numbers m(k,d) = max{d+1, 2(d-k+1)} and h(k,d) = max{d+1, 2(k+1)}.
struct HellyParameters {
    std::size_t d = 0;
    std::size_t k = 0;
    std::size_t m = 0;
    std::size_t h = 0;
};

inline HellyParameters helly_numbers(std::size_t k, std::size_t d) {
    if (k < 1 || k > d) throw input_error("helly_numbers: k must satisfy 1 <= k <= d");
    HellyParameters p;
    p.d = d;
    p.k = k;
    p.m = std::max(d + 1, 2 * (d - k + 1));
    p.h = std::max(d + 1, 2 * (k + 1));
    return p;
}

// jk/(j-1) + j <= h(k,d) for all 2 <= j <= k+1 <= d, in exact arithmetic.
inline bool helly_arithmetic_selftest(std::size_t k, std::size_t d) {
    if (k > d - 1) return false;
    const auto p = helly_numbers(k, d);
    for (std::size_t j = 2; j <= k + 1; ++j) {
        const Rational lhs = make_rational(static_cast<long>(j * k), static_cast<long>(j - 1)) +
                             make_rational(static_cast<long>(j));
        if (lhs > make_rational(static_cast<long>(p.h))) return false;
    }
    return true;
}

enum class Verdict { conclusion_holds, hypothesis_fails, counterexample, tightness_witness };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::conclusion_holds: return "conclusion_holds";
        case Verdict::hypothesis_fails: return "hypothesis_fails";
        case Verdict::counterexample: return "counterexample";
        case Verdict::tightness_witness: return "tightness_witness";
    }
    return "unknown";
}

struct VerificationReport {
    Verdict verdict = Verdict::conclusion_holds;
    std::optional<RainbowSelection> violating;      // on hypothesis_fails
    std::optional<std::size_t> satisfying_color;    // on conclusion_holds
    std::optional<std::size_t> witness_metric;      // dim lpos / cone dim of the witness
};

namespace detail {

// Max dim(lpos R) over rainbow sub-selections of size <= cap, reported as a
// first lexicographic witness exceeding `max_allowed` (or nullopt when the
// bound holds everywhere).
//
// lpos is monotone under inclusion, so only selections of the maximal size
// min(cap, #colors) need direct evaluation; a found witness is then shrunk
// to a minimal violating sub-selection. Partial selections are deduplicated
// on their distinct-vector set whenever colors share vectors, which
// collapses the enumeration for systems built from identical copies.
inline std::optional<std::pair<RainbowSelection, std::size_t>> find_lineality_violation(
    const ColoredSystem& sys, std::size_t cap, std::size_t max_allowed) {
    const std::size_t d = sys.ambient_dim;
    const std::size_t s = std::min(cap, sys.colors.size());
    if (s == 0) return std::nullopt;

    bool shared_vectors = false;
    {
        std::set<Vec> seen;
        for (const auto& c : sys.colors)
            for (const auto& v : c.vectors)
                if (!seen.insert(v).second) shared_vectors = true;
    }

    std::map<std::vector<Vec>, std::size_t> dim_cache;
    auto lpos_dim_of = [&](const std::vector<Vec>& sorted_distinct) {
        if (!shared_vectors) return lineality_dim(VectorSet(d, sorted_distinct));
        auto it = dim_cache.find(sorted_distinct);
        if (it != dim_cache.end()) return it->second;
        const std::size_t dim = lineality_dim(VectorSet(d, sorted_distinct));
        dim_cache.emplace(sorted_distinct, dim);
        return dim;
    };

    std::optional<std::pair<RainbowSelection, std::size_t>> hit;

    for_each_combination(sys.colors.size(), s, [&](const std::vector<std::size_t>& colors) {
        std::vector<std::pair<std::size_t, std::size_t>> picks;
        std::vector<Vec> current;  // sorted distinct vectors picked so far
        // (depth, picked set) states already explored within this combination
        std::set<std::pair<std::size_t, std::vector<Vec>>> visited;

        std::function<bool(std::size_t)> dfs = [&](std::size_t depth) -> bool {
            if (depth == colors.size()) {
                const std::size_t dim = lpos_dim_of(current);
                if (dim <= max_allowed) return false;
                RainbowSelection r;
                r.picks = picks;
                hit = {std::move(r), dim};
                return true;
            }
            if (shared_vectors && !visited.emplace(depth, current).second) return false;
            const VectorSet& color = sys.colors[colors[depth]];
            for (std::size_t i = 0; i < color.size(); ++i) {
                const Vec& v = color.vectors[i];
                const auto at = std::lower_bound(current.begin(), current.end(), v);
                const bool fresh = (at == current.end() || *at != v);
                if (fresh) current.insert(at, v);
                picks.emplace_back(colors[depth], i);
                if (dfs(depth + 1)) return true;
                picks.pop_back();
                if (fresh) current.erase(std::lower_bound(current.begin(), current.end(), v));
            }
            return false;
        };
        return dfs(0);
    });

    if (!hit) return std::nullopt;

    // shrink to a minimal violating sub-selection, dropping picks in order
    auto& [witness, dim] = *hit;
    for (std::size_t q = 0; q < witness.picks.size();) {
        RainbowSelection trial;
        for (std::size_t t = 0; t < witness.picks.size(); ++t)
            if (t != q) trial.picks.push_back(witness.picks[t]);
        std::vector<Vec> vs = trial.vectors_in(sys);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        if (!vs.empty() && lpos_dim_of(vs) > max_allowed)
            witness.picks.erase(witness.picks.begin() + static_cast<std::ptrdiff_t>(q));
        else
            ++q;
    }
    {
        std::vector<Vec> vs = witness.vectors_in(sys);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        dim = lpos_dim_of(vs);
    }
    return hit;
}

}  // namespace detail

// Colorful Helly for homogeneous systems: every small rainbow sub-selection
// having >= k independent solutions forces some whole color to have them.
inline VerificationReport verify_colorful_solutions(const ColoredSystem& sys, std::size_t k,
                                                    bool enforce_color_count) {
    const std::size_t d = sys.ambient_dim;
    if (k < 1 || k > d - 1) throw input_error("verify_colorful_solutions: need 1 <= k <= d-1");
    for (const auto& c : sys.colors)
        if (!c.all_nonzero()) throw input_error("verify_colorful_solutions: zero vector present");
    if (enforce_color_count && sys.colors.size() != d + (d - k) + 1)
        throw input_error("verify_colorful_solutions: expected d+(d-k)+1 colors");

    const std::size_t cap = helly_numbers(k, d).m;
    VerificationReport rep;
    // solution_dimension(R) >= k  iff  dim lpos R <= d-k
    if (auto viol = detail::find_lineality_violation(sys, cap, d - k)) {
        rep.verdict = Verdict::hypothesis_fails;
        rep.violating = viol->first;
        rep.witness_metric = d - viol->second;  // the deficient solution dimension
        return rep;
    }
    for (std::size_t i = 0; i < sys.colors.size(); ++i) {
        const std::size_t sol = solution_dimension(sys.colors[i]);
        if (sol >= k) {
            rep.verdict = Verdict::conclusion_holds;
            rep.satisfying_color = i;
            rep.witness_metric = sol;
            return rep;
        }
    }
    rep.verdict = enforce_color_count ? Verdict::counterexample : Verdict::tightness_witness;
    return rep;
}

// Colorful Caratheodory for the lineality space: dim lpos R <= k for all
// small rainbow sub-selections forces dim lpos A_i <= k for some color.
inline VerificationReport verify_colorful_lineality(
    const ColoredSystem& sys, std::size_t k, bool enforce_color_count,
    std::optional<std::size_t> size_cap_override = std::nullopt) {
    const std::size_t d = sys.ambient_dim;
    if (k < 1 || k > d - 1) throw input_error("verify_colorful_lineality: need 1 <= k <= d-1");
    if (enforce_color_count && sys.colors.size() != d + k + 1)
        throw input_error("verify_colorful_lineality: expected d+k+1 colors");

    const std::size_t cap = size_cap_override.value_or(helly_numbers(k, d).h);
    VerificationReport rep;
    if (auto viol = detail::find_lineality_violation(sys, cap, k)) {
        rep.verdict = Verdict::hypothesis_fails;
        rep.violating = viol->first;
        rep.witness_metric = viol->second;
        return rep;
    }
    for (std::size_t i = 0; i < sys.colors.size(); ++i) {
        const std::size_t dim = lineality_dim(sys.colors[i]);
        if (dim <= k) {
            rep.verdict = Verdict::conclusion_holds;
            rep.satisfying_color = i;
            rep.witness_metric = dim;
            return rep;
        }
    }
    rep.verdict = enforce_color_count ? Verdict::counterexample : Verdict::tightness_witness;
    return rep;
}

// Monochromatic special case: subsets B of A of size <= m(k,d) in place of
// rainbow sub-selections.
inline VerificationReport verify_monochromatic(const VectorSet& a, std::size_t k) {
    const std::size_t d = a.ambient_dim;
    if (k < 1 || k > d - 1) throw input_error("verify_monochromatic: need 1 <= k <= d-1");
    if (!a.all_nonzero()) throw input_error("verify_monochromatic: zero vector present");
    const std::size_t cap = helly_numbers(k, d).m;
    const std::size_t s = std::min(cap, a.size());

    VerificationReport rep;
    std::optional<std::vector<std::size_t>> bad;
    for_each_combination(a.size(), s, [&](const std::vector<std::size_t>& idx) {
        std::vector<Vec> sub;
        for (std::size_t i : idx) sub.push_back(a.vectors[i]);
        if (lineality_dim(VectorSet(d, std::move(sub))) > d - k) {
            bad = idx;
            return true;
        }
        return false;
    });
    if (bad) {
        rep.verdict = Verdict::hypothesis_fails;
        RainbowSelection r;
        for (std::size_t i : *bad) r.picks.emplace_back(0, i);
        rep.violating = r;
        return rep;
    }
    if (solution_dimension(a) >= k) {
        rep.verdict = Verdict::conclusion_holds;
        rep.satisfying_color = 0;
        rep.witness_metric = solution_dimension(a);
    } else {
        rep.verdict = Verdict::counterexample;
    }
    return rep;
}

// {x : <b_i, x> <= c_i}; a cone with apex shifted off the origin when c != 0.
struct Polyhedron {
    std::size_t ambient_dim = 0;
    Matrix normals;  // rows b_i
    Vec offsets;     // c_i

    Polyhedron() = default;
    Polyhedron(std::size_t d, Matrix ns, Vec cs)
        : ambient_dim(d), normals(std::move(ns)), offsets(std::move(cs)) {
        if (normals.width != ambient_dim) throw input_error("polyhedron: dimension mismatch");
        if (normals.height() != offsets.size())
            throw input_error("polyhedron: offsets count differs from normals count");
    }

    Polyhedron translated(const Vec& t) const {
        Polyhedron p = *this;
        for (std::size_t i = 0; i < normals.height(); ++i)
            p.offsets[i] += dot(normals.rows[i], t);
        return p;
    }
};

// Largest k such that the intersection contains a k-dimensional cone:
// 0 when empty, else ambient_dim - dim lpos of the pooled normals (the
// dimension of the joint recession cone's solution space).
inline std::size_t polyhedron_cone_dimension(const std::vector<Polyhedron>& polys) {
    if (polys.empty()) throw input_error("polyhedron_cone_dimension: no polyhedra");
    const std::size_t d = polys.front().ambient_dim;
    Matrix pooled(d);
    Vec offsets;
    for (const auto& p : polys) {
        if (p.ambient_dim != d) throw input_error("polyhedron_cone_dimension: dimension mismatch");
        pooled.rows.insert(pooled.rows.end(), p.normals.rows.begin(), p.normals.rows.end());
        offsets.insert(offsets.end(), p.offsets.begin(), p.offsets.end());
    }
    if (!polyhedron_point(pooled, offsets)) return 0;
    std::vector<Vec> distinct;
    for (const auto& r : pooled.rows) {
        if (is_zero_vec(r)) continue;
        if (std::find(distinct.begin(), distinct.end(), r) == distinct.end()) distinct.push_back(r);
    }
    if (distinct.empty()) return d;
    return d - lineality_dim(VectorSet(d, std::move(distinct)));
}

// Nonhomogeneous colorful theorem on polyhedral families: rainbow
// intersections containing k-dimensional cones force one family whose
// members share a translate of a common k-dimensional cone.
inline VerificationReport verify_nonhomogeneous(const std::vector<std::vector<Polyhedron>>& families,
                                                std::size_t k, bool enforce_family_count = true) {
    if (families.empty() || families.front().empty())
        throw input_error("verify_nonhomogeneous: empty family list");
    const std::size_t d = families.front().front().ambient_dim;
    if (k < 1 || k > d - 1) throw input_error("verify_nonhomogeneous: need 1 <= k <= d-1");
    for (const auto& f : families) {
        if (f.empty()) throw input_error("verify_nonhomogeneous: empty family");
        for (const auto& p : f)
            if (p.ambient_dim != d) throw input_error("verify_nonhomogeneous: dimension mismatch");
    }
    if (enforce_family_count && families.size() != d + (d - k) + 1)
        throw input_error("verify_nonhomogeneous: expected d+(d-k)+1 families");

    const std::size_t cap = helly_numbers(k, d).m;
    const std::size_t s = std::min(cap, families.size());

    // Phase 1 over maximal selections; cone dimension only grows when
    // polyhedra are dropped, so smaller sub-selections are covered.
    VerificationReport rep;
    std::optional<RainbowSelection> bad;
    for_each_combination(families.size(), s, [&](const std::vector<std::size_t>& fams) {
        std::vector<std::size_t> pick(s, 0);
        for (;;) {
            std::vector<Polyhedron> sel;
            for (std::size_t q = 0; q < s; ++q) sel.push_back(families[fams[q]][pick[q]]);
            if (polyhedron_cone_dimension(sel) < k) {
                RainbowSelection r;
                for (std::size_t q = 0; q < s; ++q) r.picks.emplace_back(fams[q], pick[q]);
                bad = r;
                return true;
            }
            std::size_t q = s;
            bool done = true;
            while (q > 0) {
                --q;
                if (++pick[q] < families[fams[q]].size()) {
                    done = false;
                    break;
                }
                pick[q] = 0;
            }
            if (done) return false;
        }
    });
    if (bad) {
        // shrink to a minimal violating sub-selection
        for (std::size_t q = 0; q < bad->picks.size();) {
            std::vector<Polyhedron> trial;
            for (std::size_t t = 0; t < bad->picks.size(); ++t)
                if (t != q) trial.push_back(families[bad->picks[t].first][bad->picks[t].second]);
            if (!trial.empty() && polyhedron_cone_dimension(trial) < k)
                bad->picks.erase(bad->picks.begin() + static_cast<std::ptrdiff_t>(q));
            else
                ++q;
        }
        rep.verdict = Verdict::hypothesis_fails;
        rep.violating = *bad;
        return rep;
    }

    // Phase 2: a family whose pooled recession directions span >= k dims,
    // with every member nonempty so the common cone can be translated in.
    for (std::size_t i = 0; i < families.size(); ++i) {
        bool all_nonempty = true;
        std::vector<Vec> distinct;
        for (const auto& p : families[i]) {
            if (!polyhedron_point(p.normals, p.offsets)) {
                all_nonempty = false;
                break;
            }
            for (const auto& r : p.normals.rows) {
                if (is_zero_vec(r)) continue;
                if (std::find(distinct.begin(), distinct.end(), r) == distinct.end())
                    distinct.push_back(r);
            }
        }
        if (!all_nonempty) continue;
        const std::size_t dim =
            distinct.empty() ? d : d - lineality_dim(VectorSet(d, std::move(distinct)));
        if (dim >= k) {
            rep.verdict = Verdict::conclusion_holds;
            rep.satisfying_color = i;
            rep.witness_metric = dim;
            return rep;
        }
    }
    rep.verdict = enforce_family_count ? Verdict::counterexample : Verdict::tightness_witness;
    return rep;
}

}  // namespace hellycone

#endif  // HELLYCONE_VERIFY_HPP
