#ifndef HELLYCONE_CONE_HPP
#define HELLYCONE_CONE_HPP

#include <hellycone/lp.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace hellycone {

// A finite ordered list of generators of the cone pos S. Duplicate vectors
// are rejected at construction; zero vectors only where an operation needs
// nonzero generators.
struct VectorSet {
    std::size_t ambient_dim = 0;
    std::vector<Vec> vectors;

    VectorSet() = default;
    VectorSet(std::size_t d, std::vector<Vec> vs) : ambient_dim(d), vectors(std::move(vs)) {
        for (const auto& v : vectors) {
            if (v.size() != ambient_dim) throw input_error("vector set: dimension mismatch");
        }
        for (std::size_t i = 0; i < vectors.size(); ++i)
            for (std::size_t j = i + 1; j < vectors.size(); ++j)
                if (vectors[i] == vectors[j]) throw input_error("vector set: duplicate vector");
    }

    std::size_t size() const { return vectors.size(); }

    bool all_nonzero() const {
        for (const auto& v : vectors)
            if (is_zero_vec(v)) return false;
        return true;
    }

    // d x n matrix whose columns are the generators
    Matrix column_matrix() const {
        Matrix m(size());
        m.rows.assign(ambient_dim, Vec(size(), Rational(0)));
        for (std::size_t j = 0; j < size(); ++j)
            for (std::size_t i = 0; i < ambient_dim; ++i) m.rows[i][j] = vectors[j][i];
        return m;
    }
};

// Witness of a nonnegative combination: sum of coefficients[i] * v_i equals
// `value` exactly; only strictly positive coefficients are listed.
struct DependenceCertificate {
    std::map<std::size_t, Rational> coefficients;
    Vec value;

    bool recheck(const std::vector<Vec>& vectors, std::size_t d) const {
        Vec acc(d, Rational(0));
        for (const auto& [i, c] : coefficients) {
            if (c <= 0 || i >= vectors.size()) return false;
            for (std::size_t j = 0; j < d; ++j) acc[j] += c * vectors[i][j];
        }
        return acc == value;
    }
};

// v in pos A, decided by exact-rational LP feasibility.
inline std::pair<bool, std::optional<DependenceCertificate>> pos_membership(const VectorSet& a,
                                                                            const Vec& v) {
    if (v.size() != a.ambient_dim) throw input_error("pos_membership: dimension mismatch");
    auto lambda = feasible_nonneg(a.column_matrix(), v);
    if (!lambda) return {false, std::nullopt};
    DependenceCertificate cert;
    cert.value = v;
    for (std::size_t i = 0; i < lambda->size(); ++i)
        if ((*lambda)[i] > 0) cert.coefficients.emplace(i, (*lambda)[i]);
    return {true, std::move(cert)};
}

// Indices of generators lying in lpos A, i.e. {i : -a_i in pos A}.
//
// Equivalently, the union of supports of nonnegative dependences
// {lambda >= 0 : sum lambda_i a_i = 0}. A kernel computation settles the
// dependence-free and one-dependence cases without any LP; otherwise each
// successful membership LP contributes its whole support at once.
inline std::set<std::size_t> lineality_support(const VectorSet& a) {
    const std::size_t n = a.size();
    if (n == 0) return {};
    const Matrix cols = a.column_matrix();
    const Subspace dep = kernel_basis(cols);
    if (dep.dim() == 0) return {};
    if (dep.dim() == 1) {
        const Vec& g = dep.basis.rows[0];
        bool nonneg = true, nonpos = true;
        for (const auto& x : g) {
            if (x > 0) nonpos = false;
            if (x < 0) nonneg = false;
        }
        if (!nonneg && !nonpos) return {};
        std::set<std::size_t> sup;
        for (std::size_t i = 0; i < n; ++i)
            if (g[i] != 0) sup.insert(i);
        return sup;
    }
    std::set<std::size_t> sup;
    for (std::size_t i = 0; i < n; ++i) {
        if (sup.count(i)) continue;
        auto lambda = feasible_nonneg(cols, negated(a.vectors[i]));
        if (!lambda) continue;
        sup.insert(i);
        for (std::size_t j = 0; j < n; ++j)
            if ((*lambda)[j] > 0) sup.insert(j);
    }
    return sup;
}

// lpos A = pos A intersected with -pos A, plus the generators spanning it.
inline std::pair<Subspace, std::set<std::size_t>> lineality_space(const VectorSet& a) {
    const auto sup = lineality_support(a);
    std::vector<Vec> gens;
    for (std::size_t i : sup) gens.push_back(a.vectors[i]);
    return {Subspace::span_of(a.ambient_dim, std::move(gens)), sup};
}

inline std::size_t lineality_dim(const VectorSet& a) {
    return lineality_space(a).first.dim();
}

// Maximum number of linearly independent solutions of <a, x> <= 0, a in A.
inline std::size_t solution_dimension(const VectorSet& a) {
    if (!a.all_nonzero()) throw input_error("solution_dimension: zero vector in system");
    return a.ambient_dim - lineality_dim(a);
}

inline bool is_pointed(const VectorSet& a) { return lineality_dim(a) == 0; }

// pos B equals the subspace L and no generator is removable.
inline bool is_positive_basis(const VectorSet& b, const Subspace& l) {
    if (b.ambient_dim != l.ambient_dim) throw input_error("is_positive_basis: dimension mismatch");
    for (const auto& v : b.vectors)
        if (!l.contains(v)) throw input_error("is_positive_basis: set not contained in subspace");
    if (Subspace::span_of(b.ambient_dim, b.vectors).dim() != l.dim()) return false;
    if (lineality_dim(b) != l.dim()) return false;
    for (std::size_t drop = 0; drop < b.size(); ++drop) {
        std::vector<Vec> rest;
        for (std::size_t i = 0; i < b.size(); ++i)
            if (i != drop) rest.push_back(b.vectors[i]);
        // removal keeps pos = L iff the remaining lineality still fills L
        if (lineality_dim(VectorSet(b.ambient_dim, rest)) == l.dim()) return false;
    }
    return true;
}

// |B| = dim span B + 1 >= 2 with pos B = span B: rank |B| - 1 and a single
// dependence with strictly positive coefficients.
inline std::pair<bool, std::optional<Subspace>> is_minimal_positive_basis(const VectorSet& b) {
    const std::size_t n = b.size();
    if (n < 2) return {false, std::nullopt};
    const Subspace dep = kernel_basis(b.column_matrix());
    if (dep.dim() != 1) return {false, std::nullopt};
    const Vec& g = dep.basis.rows[0];
    bool pos = true, neg = true;
    for (const auto& x : g) {
        if (x <= 0) pos = false;
        if (x >= 0) neg = false;
    }
    if (!pos && !neg) return {false, std::nullopt};
    return {true, Subspace::span_of(b.ambient_dim, b.vectors)};
}

// lexicographic index combinations, increasing cardinality handled by caller
template <typename Fn>
inline bool for_each_combination(std::size_t n, std::size_t s, Fn&& fn) {
    if (s > n) return false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
        if (fn(idx)) return true;
        // next combination
        std::size_t i = s;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - s) {
                ++idx[i];
                for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return false;
        }
        if (s == 0) return false;
    }
}

// First subset of B, in increasing cardinality then lexicographic index
// order, that is a minimal positive basis of its own span.
inline VectorSet extract_minimal_positive_basis(const VectorSet& b) {
    const Subspace span = Subspace::span_of(b.ambient_dim, b.vectors);
    if (!is_positive_basis(b, span))
        throw input_error("extract_minimal_positive_basis: input is not a positive basis");
    for (std::size_t s = 2; s <= b.size(); ++s) {
        std::optional<VectorSet> hit;
        for_each_combination(b.size(), s, [&](const std::vector<std::size_t>& idx) {
            std::vector<Vec> sub;
            for (std::size_t i : idx) sub.push_back(b.vectors[i]);
            VectorSet cand(b.ambient_dim, std::move(sub));
            if (is_minimal_positive_basis(cand).first) {
                hit = std::move(cand);
                return true;
            }
            return false;
        });
        if (hit) return *hit;
    }
    throw invariant_error("positive basis contains no minimal positive basis");
}

// Subset of A that is a positive basis of lpos A: greedy removal, in index
// order, from the generators lying in the lineality space. Returns the
// surviving indices into A alongside the vectors.
inline std::pair<VectorSet, std::vector<std::size_t>> positive_basis_of_lineality_indexed(
    const VectorSet& a) {
    auto [l, sup] = lineality_space(a);
    if (l.dim() == 0) throw input_error("positive_basis_of_lineality: no nontrivial lineality");
    std::vector<std::size_t> kept(sup.begin(), sup.end());
    for (std::size_t pos = 0; pos < kept.size();) {
        std::vector<Vec> rest;
        for (std::size_t q = 0; q < kept.size(); ++q)
            if (q != pos) rest.push_back(a.vectors[kept[q]]);
        if (lineality_dim(VectorSet(a.ambient_dim, rest)) == l.dim())
            kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(pos));
        else
            ++pos;
    }
    std::vector<Vec> vs;
    for (std::size_t i : kept) vs.push_back(a.vectors[i]);
    return {VectorSet(a.ambient_dim, std::move(vs)), kept};
}

inline VectorSet positive_basis_of_lineality(const VectorSet& a) {
    return positive_basis_of_lineality_indexed(a).first;
}

}  // namespace hellycone

#endif  // HELLYCONE_CONE_HPP
