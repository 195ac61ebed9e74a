#ifndef HELLYCONE_REAY_HPP
#define HELLYCONE_REAY_HPP

#include <hellycone/rainbow.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hellycone {

struct ReayBlock {
    std::vector<std::size_t> color_indices;  // I_j, sorted
    RainbowSelection picks;                  // R_j
};

// Rainbow sub-selection partitioned into blocks R_1..R_m with
// L_i = pos(R_1 u ... u R_i) a linear subspace of dimension sum |R_j| - i.
struct ReayDecomposition {
    std::vector<ReayBlock> blocks;
    std::vector<Subspace> block_subspaces;  // L_1..L_m

    std::size_t block_count() const { return blocks.size(); }

    std::vector<Vec> prefix_vectors(const ColoredSystem& sys, std::size_t upto) const {
        std::vector<Vec> vs;
        for (std::size_t j = 0; j < upto; ++j) {
            auto bv = blocks[j].picks.vectors_in(sys);
            vs.insert(vs.end(), bv.begin(), bv.end());
        }
        return vs;
    }
};

struct DecompositionReport {
    bool pass = true;
    std::string first_violation;  // empty when pass

    static DecompositionReport ok() { return {}; }
    static DecompositionReport fail(std::string clause) { return {false, std::move(clause)}; }
};

namespace detail {

// Returns whether every color meets the per-color lineality hypothesis. The
// construction is attempted even when it does not (singleton-color toy
// instances can still decompose); failures are then the caller's hypothesis
// problem, not a bug.
inline bool check_reay_preconditions(const ColoredSystem& sys, std::size_t k) {
    const std::size_t d = sys.ambient_dim;
    if (k < 1 || k > d) throw input_error("reay: k must satisfy 1 <= k <= d");
    if (sys.colors.size() != d + k)
        throw input_error("reay: expected exactly d+k = " + std::to_string(d + k) + " colors");
    for (std::size_t i = 0; i < sys.colors.size(); ++i)
        if (lineality_dim(sys.colors[i]) < k) return false;
    return true;
}

}  // namespace detail

// Weak Colorful Reay decomposition: first block is a maximal-cardinality
// rainbow minimal positive basis; while dim L < k, remaining colors are
// projected onto the orthogonal complement of L and the next maximal block
// is taken. Terminates in at most k steps.
inline ReayDecomposition reay_decompose_weak(const ColoredSystem& sys, std::size_t k) {
    const bool hypotheses_hold = detail::check_reay_preconditions(sys, k);
    const std::size_t d = sys.ambient_dim;

    ReayDecomposition dec;
    std::vector<std::size_t> available(sys.colors.size());
    for (std::size_t i = 0; i < available.size(); ++i) available[i] = i;
    Projector p{Matrix::identity(d)};
    std::size_t picked_total = 0;

    for (;;) {
        auto found = max_cardinality_rainbow_mpb(available, sys, p);
        if (!found) {
            if (!hypotheses_hold)
                throw input_error("reay: some color has lineality dimension below k");
            throw invariant_error("reay: no next block despite valid hypotheses");
        }
        dec.blocks.push_back(ReayBlock{found->color_indices, found->selection});
        picked_total += found->selection.size();

        const std::size_t m = dec.blocks.size();
        const Subspace l = Subspace::span_of(d, dec.prefix_vectors(sys, m));
        if (l.dim() != picked_total - m)
            throw invariant_error("reay: prefix dimension formula violated during construction");
        dec.block_subspaces.push_back(l);

        std::vector<std::size_t> rest;
        for (std::size_t c : available)
            if (std::find(found->color_indices.begin(), found->color_indices.end(), c) ==
                found->color_indices.end())
                rest.push_back(c);
        available = std::move(rest);

        // budget identity: remaining colors = d - dim L + (k - m)
        if (available.size() != d + k - picked_total ||
            d + k - picked_total != d - l.dim() + (k - m))
            throw invariant_error("reay: color budget identity violated");

        if (l.dim() >= k) return dec;
        if (m >= k) {
            if (!hypotheses_hold)
                throw input_error("reay: some color has lineality dimension below k");
            throw invariant_error("reay: failed to reach dimension k within k blocks");
        }
        p = orthogonal_projector(l);
    }
}

DecompositionReport verify_decomposition(const ReayDecomposition& dec, const ColoredSystem& sys,
                                         std::size_t k, bool strong);

// Strong form: additionally the union of the first i blocks is a positive
// basis of L_i for every i. Obtained by re-running the weak construction on
// d + dim(pos R') copies of a positive basis R extracted from the weak
// output R', then relabeling picks back to their original colors.
inline ReayDecomposition reay_decompose(const ColoredSystem& sys, std::size_t k) {
    ReayDecomposition weak = reay_decompose_weak(sys, k);
    if (verify_decomposition(weak, sys, k, /*strong=*/true).pass) return weak;

    const std::size_t d = sys.ambient_dim;
    // gather R' with provenance
    std::vector<Vec> rprime;
    std::map<Vec, std::pair<std::size_t, std::size_t>> origin;
    for (const auto& b : weak.blocks) {
        for (const auto& [c, i] : b.picks.picks) {
            const Vec& v = sys.colors[c].vectors[i];
            rprime.push_back(v);
            origin[v] = {c, i};
        }
    }
    const VectorSet rprime_set(d, rprime);
    const VectorSet basis = positive_basis_of_lineality(rprime_set);
    const std::size_t span_dim = Subspace::span_of(d, basis.vectors).dim();

    std::vector<VectorSet> copies(d + span_dim, basis);
    const ColoredSystem copy_sys(d, std::move(copies));
    const ReayDecomposition on_copies = reay_decompose_weak(copy_sys, span_dim);

    ReayDecomposition out;
    for (const auto& b : on_copies.blocks) {
        ReayBlock nb;
        for (const auto& [c, i] : b.picks.picks) {
            auto it = origin.find(basis.vectors[i]);
            if (it == origin.end()) throw invariant_error("reay: lost pick provenance");
            nb.picks.picks.push_back(it->second);
            nb.color_indices.push_back(it->second.first);
        }
        std::sort(nb.picks.picks.begin(), nb.picks.picks.end());
        std::sort(nb.color_indices.begin(), nb.color_indices.end());
        if (std::adjacent_find(nb.color_indices.begin(), nb.color_indices.end()) !=
            nb.color_indices.end())
            throw invariant_error("reay: relabeled block is not rainbow");
        out.blocks.push_back(std::move(nb));
    }
    std::size_t total = 0;
    for (std::size_t i = 0; i < out.blocks.size(); ++i) {
        total += out.blocks[i].picks.size();
        const Subspace l = Subspace::span_of(d, out.prefix_vectors(sys, i + 1));
        if (l.dim() != total - (i + 1))
            throw invariant_error("reay: strong-form prefix dimension formula violated");
        out.block_subspaces.push_back(l);
    }
    return out;
}

// Independent re-check of Theorem properties, from raw vectors only.
inline DecompositionReport verify_decomposition(const ReayDecomposition& dec,
                                                const ColoredSystem& sys, std::size_t k,
                                                bool strong) {
    const std::size_t d = sys.ambient_dim;
    if (dec.blocks.empty()) return DecompositionReport::fail("empty decomposition");
    if (dec.block_subspaces.size() != dec.blocks.size())
        return DecompositionReport::fail("block/subspace count mismatch");

    // rainbow validity: picks in range, color index sets pairwise disjoint
    std::vector<bool> used(sys.colors.size(), false);
    for (const auto& b : dec.blocks) {
        if (b.color_indices.size() != b.picks.size())
            return DecompositionReport::fail("block size differs from its index set");
        for (std::size_t q = 0; q < b.picks.picks.size(); ++q) {
            const auto [c, i] = b.picks.picks[q];
            if (c >= sys.colors.size() || i >= sys.colors[c].size())
                throw input_error("verify_decomposition: pick out of range");
            if (b.color_indices[q] != c)
                return DecompositionReport::fail("index set does not match picks");
            if (used[c]) return DecompositionReport::fail("rainbow property: color reused");
            used[c] = true;
        }
    }

    // monotone sizes >= 2
    for (std::size_t j = 0; j < dec.blocks.size(); ++j) {
        if (dec.blocks[j].picks.size() < 2)
            return DecompositionReport::fail("monotone sizes");
        if (j + 1 < dec.blocks.size() &&
            dec.blocks[j].picks.size() < dec.blocks[j + 1].picks.size())
            return DecompositionReport::fail("monotone sizes");
    }

    // each prefix positively spans a subspace of the stated dimension
    std::size_t total = 0;
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
        total += dec.blocks[i].picks.size();
        const std::vector<Vec> prefix = dec.prefix_vectors(sys, i + 1);
        const VectorSet prefix_set(d, prefix);
        const Subspace span = Subspace::span_of(d, prefix);
        if (lineality_support(prefix_set).size() != prefix.size())
            return DecompositionReport::fail("prefix hull is not a linear subspace");
        if (span.dim() != total - (i + 1))
            return DecompositionReport::fail("dimension formula");
        if (!(span == dec.block_subspaces[i]))
            return DecompositionReport::fail("recorded subspace differs from recomputed one");
        if (strong && !is_positive_basis(prefix_set, span))
            return DecompositionReport::fail("prefix positive-basis property");
    }
    if (dec.block_subspaces.back().dim() < k)
        return DecompositionReport::fail("final dimension below k");
    return DecompositionReport::ok();
}

}  // namespace hellycone

#endif  // HELLYCONE_REAY_HPP
