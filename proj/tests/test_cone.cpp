#include <hellycone/cone.hpp>
#include <hellycone/gen.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace hellycone;

namespace {

VectorSet vs2(std::initializer_list<Vec> vs) { return VectorSet(2, std::vector<Vec>(vs)); }
VectorSet vs3(std::initializer_list<Vec> vs) { return VectorSet(3, std::vector<Vec>(vs)); }

}  // namespace

TEST_CASE("vector set construction rules") {
    REQUIRE_THROWS_AS(vs2({vec_of({1, 0}), vec_of({1, 0})}), input_error);
    REQUIRE_THROWS_AS(VectorSet(2, {vec_of({1, 0, 0})}), input_error);
    REQUIRE(vs2({vec_of({1, 0}), vec_of({0, 0})}).all_nonzero() == false);
}

TEST_CASE("pos_membership") {
    VectorSet a = vs2({unit_vec(2, 0), unit_vec(2, 1)});
    {
        auto [in, cert] = pos_membership(a, vec_of({1, 2}));
        REQUIRE(in);
        REQUIRE(cert->recheck(a.vectors, 2));
        REQUIRE(cert->coefficients.at(0) == 1);
        REQUIRE(cert->coefficients.at(1) == 2);
    }
    REQUIRE_FALSE(pos_membership(a, vec_of({-1, 0})).first);
    {
        VectorSet b = vs2({vec_of({1, 1}), vec_of({1, -1})});
        auto [in, cert] = pos_membership(b, vec_of({1, 0}));
        REQUIRE(in);
        REQUIRE(cert->recheck(b.vectors, 2));
        REQUIRE(cert->coefficients.at(0) == make_rational(1, 2));
        REQUIRE(cert->coefficients.at(1) == make_rational(1, 2));
    }
    REQUIRE_THROWS_AS(pos_membership(a, vec_of({1, 0, 0})), input_error);
}

TEST_CASE("lineality_space examples") {
    {
        auto [l, idx] = lineality_space(
            vs2({unit_vec(2, 0), unit_vec(2, 0, -1), unit_vec(2, 1), unit_vec(2, 1, -1)}));
        REQUIRE(l == Subspace::full(2));
        REQUIRE(idx == std::set<std::size_t>{0, 1, 2, 3});
    }
    {
        auto [l, idx] = lineality_space(vs2({unit_vec(2, 0), unit_vec(2, 1)}));
        REQUIRE(l.dim() == 0);
        REQUIRE(idx.empty());
    }
    {
        auto [l, idx] = lineality_space(vs3({unit_vec(3, 0), unit_vec(3, 0, -1), unit_vec(3, 1)}));
        REQUIRE(l == Subspace::span_of(3, {unit_vec(3, 0)}));
        REQUIRE(idx == std::set<std::size_t>{0, 1});
    }
}

TEST_CASE("lineality_space matches the brute-force oracle") {
    // seeded small instances, oracle is subset enumeration with its own
    // elimination code
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        for (std::size_t d = 1; d <= 4; ++d) {
            auto rng = color_rng(seed, d);
            std::uniform_int_distribution<std::size_t> size(1, 6);
            std::vector<Vec> vecs;
            const std::size_t n = size(rng);
            while (vecs.size() < n) {
                Vec v = random_nonzero_vec(rng, d);
                bool dup = false;
                for (const auto& u : vecs) dup = dup || (u == v);
                if (!dup) vecs.push_back(v);
            }
            VectorSet a(d, vecs);
            auto [l, idx] = lineality_space(a);
            REQUIRE(idx == oracle::lineality_support(a));
            REQUIRE(l.dim() == oracle::lineality_dim(a));
        }
    }
}

TEST_CASE("solution_dimension") {
    REQUIRE(solution_dimension(vs3({unit_vec(3, 0)})) == 3);
    REQUIRE(solution_dimension(vs3({unit_vec(3, 0), unit_vec(3, 0, -1)})) == 2);
    for (std::size_t d = 1; d <= 4; ++d)
        REQUIRE(solution_dimension(gen_simplex_vertices(d)) == 0);
    REQUIRE_THROWS_AS(solution_dimension(vs2({vec_of({0, 0}), vec_of({1, 0})})), input_error);
}

TEST_CASE("lineality duality on random sets") {
    for (std::uint64_t seed = 40; seed <= 55; ++seed) {
        const ColoredSystem sys = gen_random_unplanted(3, {5}, seed);
        const VectorSet& a = sys.colors[0];
        REQUIRE(solution_dimension(a) == a.ambient_dim - lineality_dim(a));
    }
}

TEST_CASE("is_positive_basis") {
    const Subspace r2 = Subspace::full(2);
    REQUIRE(is_positive_basis(vs2({unit_vec(2, 0), unit_vec(2, 1), vec_of({-1, -1})}), r2));
    REQUIRE_FALSE(is_positive_basis(vs2({unit_vec(2, 0), unit_vec(2, 0, -1), unit_vec(2, 1),
                                         unit_vec(2, 1, -1), vec_of({1, 1})}),
                                    r2));
    REQUIRE_FALSE(is_positive_basis(vs2({unit_vec(2, 0), unit_vec(2, 1)}), r2));
    REQUIRE_THROWS_AS(
        is_positive_basis(vs2({unit_vec(2, 0)}), Subspace::span_of(2, {unit_vec(2, 1)})),
        input_error);
}

TEST_CASE("is_minimal_positive_basis") {
    {
        auto [ok, l] = is_minimal_positive_basis(
            vs2({unit_vec(2, 0), unit_vec(2, 1), vec_of({-1, -1})}));
        REQUIRE(ok);
        REQUIRE(*l == Subspace::full(2));
    }
    {
        auto [ok, l] = is_minimal_positive_basis(vs2({unit_vec(2, 0), unit_vec(2, 0, -1)}));
        REQUIRE(ok);
        REQUIRE(*l == Subspace::span_of(2, {unit_vec(2, 0)}));
    }
    {
        VectorSet halfplane = vs3({unit_vec(3, 0), unit_vec(3, 0, -1), unit_vec(3, 1)});
        REQUIRE_FALSE(is_minimal_positive_basis(halfplane).first);
        // cross-check: its lineality differs from its span
        REQUIRE(lineality_dim(halfplane) <
                Subspace::span_of(3, halfplane.vectors).dim());
    }
    REQUIRE_FALSE(is_minimal_positive_basis(vs2({unit_vec(2, 0)})).first);
}

TEST_CASE("extract_minimal_positive_basis") {
    {
        VectorSet b = vs2({unit_vec(2, 0), unit_vec(2, 0, -1), unit_vec(2, 1), unit_vec(2, 1, -1)});
        VectorSet m = extract_minimal_positive_basis(b);
        REQUIRE(m.vectors == std::vector<Vec>{unit_vec(2, 0), unit_vec(2, 0, -1)});
    }
    {
        VectorSet b = vs2({unit_vec(2, 0), unit_vec(2, 1), vec_of({-1, -1})});
        REQUIRE(extract_minimal_positive_basis(b).vectors == b.vectors);
    }
    REQUIRE_THROWS_AS(
        extract_minimal_positive_basis(vs2({unit_vec(2, 0), unit_vec(2, 0, -1), unit_vec(2, 1),
                                            unit_vec(2, 1, -1), vec_of({1, 1})})),
        input_error);
}

TEST_CASE("positive_basis_of_lineality") {
    {
        VectorSet a = vs2({unit_vec(2, 0), unit_vec(2, 0, -1), unit_vec(2, 1)});
        REQUIRE(positive_basis_of_lineality(a).vectors ==
                std::vector<Vec>{unit_vec(2, 0), unit_vec(2, 0, -1)});
    }
    {
        VectorSet a = vs2({unit_vec(2, 0), unit_vec(2, 0, -1), unit_vec(2, 1), unit_vec(2, 1, -1)});
        VectorSet b = positive_basis_of_lineality(a);
        REQUIRE(b.vectors == a.vectors);  // no single removal keeps pos = R^2
        REQUIRE(is_positive_basis(b, Subspace::full(2)));
    }
    REQUIRE_THROWS_AS(positive_basis_of_lineality(vs2({unit_vec(2, 0), unit_vec(2, 1)})),
                      input_error);
}

TEST_CASE("is_pointed") {
    REQUIRE(is_pointed(vs2({unit_vec(2, 0), unit_vec(2, 1)})));
    REQUIRE_FALSE(is_pointed(vs2({unit_vec(2, 0), unit_vec(2, 0, -1)})));
    // projection of {+-e_1, (1,1)} onto the complement of span{e_1}
    Projector p = orthogonal_projector(Subspace::span_of(2, {unit_vec(2, 0)}));
    std::vector<Vec> imgs;
    for (const Vec& v : {unit_vec(2, 0), unit_vec(2, 0, -1), vec_of({1, 1})}) {
        Vec w = p(v);
        if (!is_zero_vec(w)) imgs.push_back(w);
    }
    REQUIRE(imgs == std::vector<Vec>{vec_of({0, 1})});
    REQUIRE(is_pointed(VectorSet(2, imgs)));
}

TEST_CASE("direct sum property pos A = L + pos P(A)") {
    for (std::uint64_t seed = 60; seed <= 70; ++seed) {
        const ColoredSystem sys = gen_random_unplanted(3, {5}, seed);
        const VectorSet& a = sys.colors[0];
        auto [l, idx] = lineality_space(a);
        Projector p = orthogonal_projector(l);
        std::vector<Vec> imgs;
        for (const auto& v : a.vectors) {
            Vec w = p(v);
            bool dup = is_zero_vec(w);
            for (const auto& u : imgs) dup = dup || (u == w);
            if (!dup) imgs.push_back(w);
        }
        // pointedness after projection
        if (!imgs.empty()) REQUIRE(is_pointed(VectorSet(3, imgs)));
        auto rng = color_rng(seed, 99);
        for (int t = 0; t < 5; ++t) {
            Vec v = random_vec(rng, 3);
            const bool lhs = pos_membership(a, v).first;
            const Vec pv = p(v);
            const bool rhs = imgs.empty() ? is_zero_vec(pv)
                                          : pos_membership(VectorSet(3, imgs), pv).first;
            REQUIRE(lhs == rhs);
        }
    }
}
