#include <hellycone/gen.hpp>
#include <hellycone/verify.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace hellycone;

namespace {

// enumerate every rainbow sub-selection (any subset of colors, one pick per
// chosen color) and apply fn to the deduplicated vector list
template <typename Fn>
void for_each_rainbow(const ColoredSystem& sys, Fn&& fn) {
    const std::size_t n = sys.colors.size();
    for (std::size_t s = 1; s <= n; ++s) {
        for_each_combination(n, s, [&](const std::vector<std::size_t>& comb) {
            std::vector<std::size_t> pick(s, 0);
            for (;;) {
                std::vector<Vec> vs;
                for (std::size_t q = 0; q < s; ++q)
                    vs.push_back(sys.colors[comb[q]].vectors[pick[q]]);
                std::sort(vs.begin(), vs.end());
                vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
                fn(vs);
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
    }
}

}  // namespace

TEST_CASE("cross polytope") {
    VectorSet a = gen_cross_polytope(1, 2);
    REQUIRE(a.vectors == std::vector<Vec>{unit_vec(2, 0), unit_vec(2, 0, -1), unit_vec(2, 1),
                                          unit_vec(2, 1, -1)});
    for (std::size_t d = 2; d <= 6; ++d) {
        for (std::size_t k = 1; k + 1 <= d; ++k) {
            VectorSet c = gen_cross_polytope(k, d);
            REQUIRE(c.size() == 2 * (k + 1));
            REQUIRE(lineality_dim(c) == k + 1);
            for (std::size_t drop = 0; drop < c.size(); ++drop) {
                std::vector<Vec> rest;
                for (std::size_t i = 0; i < c.size(); ++i)
                    if (i != drop) rest.push_back(c.vectors[i]);
                REQUIRE(lineality_dim(VectorSet(d, rest)) <= k);
            }
        }
    }
    REQUIRE_THROWS_AS(gen_cross_polytope(2, 2), input_error);
}

TEST_CASE("zero-sum simplex") {
    VectorSet a = gen_simplex_vertices(2);
    REQUIRE(a.vectors == std::vector<Vec>{vec_of({1, 0}), vec_of({0, 1}), vec_of({-1, -1})});
    for (std::size_t d = 1; d <= 5; ++d) {
        VectorSet s = gen_simplex_vertices(d);
        Vec sum(d, Rational(0));
        for (const auto& v : s.vectors)
            for (std::size_t j = 0; j < d; ++j) sum[j] += v[j];
        REQUIRE(is_zero_vec(sum));
        REQUIRE(lineality_dim(s) == d);
        // every subset of size <= d is pointed
        for (std::size_t sz = 1; sz <= d; ++sz) {
            for_each_combination(s.size(), sz, [&](const std::vector<std::size_t>& idx) {
                std::vector<Vec> sub;
                for (std::size_t i : idx) sub.push_back(s.vectors[i]);
                REQUIRE(lineality_dim(VectorSet(d, sub)) == 0);
                return false;
            });
        }
    }
}

TEST_CASE("extremal colorful construction") {
    {
        const ColoredSystem sys = gen_extremal_colorful(1, 1);
        REQUIRE(sys.colors.size() == 1);
        REQUIRE(sys.colors[0].vectors == std::vector<Vec>{vec_of({1}), vec_of({-1})});
    }
    // exhaustive rainbow check kept small here; the acceptance suite covers
    // d <= 5 through the deduplicated enumerator
    for (std::size_t d = 1; d <= 3; ++d) {
        for (std::size_t k = 1; k <= d; ++k) {
            const ColoredSystem sys = gen_extremal_colorful(d, k);
            REQUIRE(sys.colors.size() == d + k - 1);
            for (const auto& c : sys.colors) REQUIRE(lineality_dim(c) >= k);
            // appended colors are minimal positive bases of growing subspaces
            for (std::size_t j = k + 1; j <= d; ++j) {
                const VectorSet& c = sys.colors[2 * k - 2 + (j - k)];
                REQUIRE(c.size() == j + 1);
                REQUIRE(is_minimal_positive_basis(c).first);
                for (const auto& v : c.vectors) REQUIRE(v[j - 1] != 0);
            }
            // the defining property: every rainbow sub-selection stays under k
            for_each_rainbow(sys, [&](const std::vector<Vec>& vs) {
                REQUIRE(lineality_dim(VectorSet(d, vs)) < k);
            });
        }
    }
    REQUIRE_THROWS_AS(gen_extremal_colorful(2, 3), input_error);
}

TEST_CASE("optimal size example") {
    REQUIRE(gen_optimal_size_example(1, 5).vectors == gen_simplex_vertices(5).vectors);
    REQUIRE(gen_optimal_size_example(2, 3).vectors == gen_cross_polytope(2, 3).vectors);
    for (std::size_t d = 2; d <= 5; ++d) {
        for (std::size_t k = 1; k + 1 <= d; ++k) {
            VectorSet a = gen_optimal_size_example(k, d);
            REQUIRE(lineality_dim(a) >= k + 1);
            const std::size_t h = helly_numbers(k, d).h;
            const std::size_t cap = std::min(a.size() - 1, h - 1);
            for (std::size_t sz = 1; sz <= cap; ++sz) {
                for_each_combination(a.size(), sz, [&](const std::vector<std::size_t>& idx) {
                    std::vector<Vec> sub;
                    for (std::size_t i : idx) sub.push_back(a.vectors[i]);
                    REQUIRE(lineality_dim(VectorSet(d, sub)) <= k);
                    return false;
                });
            }
        }
    }
}

TEST_CASE("random planted generator") {
    const ColoredSystem sys = gen_random_planted(3, 2, 5, 0, 7);
    REQUIRE(sys.colors.size() == 5);
    for (const auto& c : sys.colors) {
        REQUIRE(c.size() == 3);
        REQUIRE(lineality_dim(c) == 2);
    }
    // k = d: each color is a minimal positive basis of R^d
    const ColoredSystem full = gen_random_planted(2, 2, 3, 0, 9);
    for (const auto& c : full.colors) {
        auto [ok, l] = is_minimal_positive_basis(c);
        REQUIRE(ok);
        REQUIRE(*l == Subspace::full(2));
    }
    // determinism
    const ColoredSystem again = gen_random_planted(3, 2, 5, 0, 7);
    for (std::size_t i = 0; i < 5; ++i) REQUIRE(sys.colors[i].vectors == again.colors[i].vectors);
    // extra vectors never lower the planted lineality
    const ColoredSystem extra = gen_random_planted(3, 2, 4, 2, 11);
    for (const auto& c : extra.colors) {
        REQUIRE(c.size() == 5);
        REQUIRE(lineality_dim(c) >= 2);
    }
}
