#ifndef HELLYCONE_GEN_HPP
#define HELLYCONE_GEN_HPP

#include <hellycone/rainbow.hpp>

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace hellycone {

// Deterministic seeding scheme: color i of a system with master seed s is
// generated from mt19937_64 seeded with splitmix64(s XOR (i + 1)), so colors
// replay individually and in any order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::mt19937_64 color_rng(std::uint64_t seed, std::size_t color_index) {
    return std::mt19937_64(splitmix64(seed ^ static_cast<std::uint64_t>(color_index + 1)));
}

// Random rational with |num| <= 100, den <= 10, canonical.
inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-100, 100);
    std::uniform_int_distribution<long> den(1, 10);
    return make_rational(num(rng), den(rng));
}

inline Vec random_vec(std::mt19937_64& rng, std::size_t d) {
    Vec v(d);
    for (auto& x : v) x = random_rational(rng);
    return v;
}

inline Vec random_nonzero_vec(std::mt19937_64& rng, std::size_t d) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Vec v = random_vec(rng, d);
        if (!is_zero_vec(v)) return v;
    }
    throw invariant_error("random_nonzero_vec: rejection cap exhausted");
}

// Vertices of the (k+1)-dimensional cross-polytope embedded in R^d.
inline VectorSet gen_cross_polytope(std::size_t k, std::size_t d) {
    if (k + 1 > d) throw input_error("gen_cross_polytope: needs k+1 <= d");
    std::vector<Vec> vs;
    for (std::size_t i = 0; i <= k; ++i) {
        vs.push_back(unit_vec(d, i, 1));
        vs.push_back(unit_vec(d, i, -1));
    }
    return VectorSet(d, std::move(vs));
}

// Rational zero-sum simplex: e_1..e_d and -(e_1+...+e_d). Every d of the
// d+1 vectors are linearly independent and the whole set sums to zero.
inline VectorSet gen_simplex_vertices(std::size_t d) {
    if (d < 1) throw input_error("gen_simplex_vertices: needs d >= 1");
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < d; ++i) vs.push_back(unit_vec(d, i));
    Vec last(d, Rational(-1));
    vs.push_back(std::move(last));
    return VectorSet(d, std::move(vs));
}

// d+k-1 colors, each with lineality dimension >= k, such that every rainbow
// sub-selection R has dim lpos R < k. Base (dimension k): 2k-1 copies of
// {+-e_1..+-e_k}; each dimension step j-1 -> j appends one minimal positive
// basis of R^j whose vectors all have nonzero j-th coordinate:
// {e_i + e_j : i < j} u {e_j} u {-(e_1+...+e_{j-1} + j e_j)}.
inline ColoredSystem gen_extremal_colorful(std::size_t d, std::size_t k) {
    if (k < 1 || k > d) throw input_error("gen_extremal_colorful: needs 1 <= k <= d");
    std::vector<VectorSet> colors;
    {
        std::vector<Vec> base;
        for (std::size_t i = 0; i < k; ++i) {
            base.push_back(unit_vec(d, i, 1));
            base.push_back(unit_vec(d, i, -1));
        }
        const VectorSet base_set(d, std::move(base));
        for (std::size_t c = 0; c + 1 < 2 * k; ++c) colors.push_back(base_set);
    }
    for (std::size_t j = k + 1; j <= d; ++j) {
        std::vector<Vec> vs;
        for (std::size_t i = 0; i + 1 < j; ++i) {
            Vec v(d, Rational(0));
            v[i] = 1;
            v[j - 1] = 1;
            vs.push_back(std::move(v));
        }
        vs.push_back(unit_vec(d, j - 1));
        Vec w(d, Rational(0));
        for (std::size_t i = 0; i + 1 < j; ++i) w[i] = -1;
        w[j - 1] = -static_cast<long>(j);
        vs.push_back(std::move(w));
        colors.emplace_back(d, std::move(vs));
    }
    return ColoredSystem(d, std::move(colors));
}

// The set showing h(k,d) optimal: zero-sum simplex when d+1 >= 2(k+1),
// otherwise the (k+1)-dimensional cross-polytope.
inline VectorSet gen_optimal_size_example(std::size_t k, std::size_t d) {
    if (k > d - 1) throw input_error("gen_optimal_size_example: needs 0 <= k <= d-1");
    if (d + 1 >= 2 * (k + 1)) return gen_simplex_vertices(d);
    return gen_cross_polytope(k, d);
}

// Each color: a minimal positive basis of a random k-dimensional subspace
// (k independent random vectors plus their negated sum) plus `extra`
// random nonzero vectors. Deterministic per (d, k, n_colors, extra, seed).
inline ColoredSystem gen_random_planted(std::size_t d, std::size_t k, std::size_t n_colors,
                                        std::size_t extra, std::uint64_t seed) {
    if (k < 1 || k > d) throw input_error("gen_random_planted: needs 1 <= k <= d");
    if (n_colors < 1) throw input_error("gen_random_planted: needs at least one color");
    std::vector<VectorSet> colors;
    for (std::size_t c = 0; c < n_colors; ++c) {
        auto rng = color_rng(seed, c);
        std::vector<Vec> vs;
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 1000) throw invariant_error("gen_random_planted: rejection cap");
            Vec v = random_nonzero_vec(rng, d);
            std::vector<Vec> trial = vs;
            trial.push_back(v);
            if (rank_of_vectors(trial, d) == trial.size()) {
                vs = std::move(trial);
                if (vs.size() == k) break;
                attempt = 0;
            }
        }
        Vec neg_sum(d, Rational(0));
        for (const auto& v : vs)
            for (std::size_t j = 0; j < d; ++j) neg_sum[j] -= v[j];
        vs.push_back(std::move(neg_sum));
        for (std::size_t e = 0; e < extra;) {
            Vec v = random_nonzero_vec(rng, d);
            bool dup = false;
            for (const auto& u : vs) dup = dup || (u == v);
            if (dup) continue;
            vs.push_back(std::move(v));
            ++e;
        }
        colors.emplace_back(d, std::move(vs));
    }
    return ColoredSystem(d, std::move(colors));
}

// Unplanted variant for property tests: colors of random nonzero vectors.
inline ColoredSystem gen_random_unplanted(std::size_t d, const std::vector<std::size_t>& sizes,
                                          std::uint64_t seed) {
    std::vector<VectorSet> colors;
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        auto rng = color_rng(seed, c);
        std::vector<Vec> vs;
        while (vs.size() < sizes[c]) {
            Vec v = random_nonzero_vec(rng, d);
            bool dup = false;
            for (const auto& u : vs) dup = dup || (u == v);
            if (!dup) vs.push_back(std::move(v));
        }
        colors.emplace_back(d, std::move(vs));
    }
    return ColoredSystem(d, std::move(colors));
}

}  // namespace hellycone

#endif  // HELLYCONE_GEN_HPP
