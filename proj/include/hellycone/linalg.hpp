#ifndef HELLYCONE_LINALG_HPP
#define HELLYCONE_LINALG_HPP

#include <hellycone/rational.hpp>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace hellycone {

// Dense exact-rational matrix, stored by rows. Rows share one width even
// when there are zero rows, so an "empty" matrix still knows its ambient
// dimension.
struct Matrix {
    std::size_t width = 0;
    std::vector<Vec> rows;

    Matrix() = default;
    explicit Matrix(std::size_t w) : width(w) {}
    Matrix(std::size_t w, std::vector<Vec> rs) : width(w), rows(std::move(rs)) {
        for (const auto& r : rows)
            if (r.size() != width) throw input_error("matrix is not rectangular");
    }

    static Matrix from_rows(std::vector<Vec> rs) {
        if (rs.empty()) return Matrix(0);
        const std::size_t w = rs.front().size();
        return Matrix(w, std::move(rs));
    }

    static Matrix identity(std::size_t d) {
        Matrix m(d);
        for (std::size_t i = 0; i < d; ++i) m.rows.push_back(unit_vec(d, i));
        return m;
    }

    std::size_t height() const { return rows.size(); }

    Matrix transposed() const {
        Matrix t(height());
        t.rows.assign(width, Vec(height(), Rational(0)));
        for (std::size_t i = 0; i < height(); ++i)
            for (std::size_t j = 0; j < width; ++j) t.rows[j][i] = rows[i][j];
        return t;
    }

    Vec apply(const Vec& v) const {
        if (v.size() != width) throw input_error("matrix apply: dimension mismatch");
        Vec out;
        out.reserve(height());
        for (const auto& r : rows) out.push_back(dot(r, v));
        return out;
    }

    bool operator==(const Matrix& o) const { return width == o.width && rows == o.rows; }
};

// In-place reduced row echelon form. Returns the pivot columns.
inline std::vector<std::size_t> rref_in_place(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.width && row < m.height(); ++col) {
        std::size_t sel = row;
        while (sel < m.height() && m.rows[sel][col] == 0) ++sel;
        if (sel == m.height()) continue;
        std::swap(m.rows[row], m.rows[sel]);
        const Rational inv = 1 / m.rows[row][col];
        for (auto& x : m.rows[row]) x *= inv;
        for (std::size_t i = 0; i < m.height(); ++i) {
            if (i == row || m.rows[i][col] == 0) continue;
            const Rational f = m.rows[i][col];
            for (std::size_t j = col; j < m.width; ++j) m.rows[i][j] -= f * m.rows[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    m.rows.resize(pivots.size(), Vec(m.width, Rational(0)));
    return pivots;
}

inline std::size_t rank(Matrix m) { return rref_in_place(m).size(); }

inline std::size_t rank_of_vectors(const std::vector<Vec>& vs, std::size_t width) {
    return rank(Matrix(width, vs));
}

// A linear subspace of R^d, held as a canonical (RREF) basis so that equal
// subspaces compare equal componentwise.
struct Subspace {
    std::size_t ambient_dim = 0;
    Matrix basis;  // rows, in reduced echelon form; linearly independent

    static Subspace trivial(std::size_t d) {
        Subspace s;
        s.ambient_dim = d;
        s.basis = Matrix(d);
        return s;
    }

    static Subspace span_of(std::size_t d, std::vector<Vec> gens) {
        Subspace s;
        s.ambient_dim = d;
        s.basis = Matrix(d, std::move(gens));
        rref_in_place(s.basis);
        return s;
    }

    static Subspace full(std::size_t d) { return span_of(d, Matrix::identity(d).rows); }

    std::size_t dim() const { return basis.height(); }

    bool contains(const Vec& v) const {
        if (v.size() != ambient_dim) throw input_error("subspace: dimension mismatch");
        // reduce v against the echelon basis
        Vec r = v;
        for (const auto& b : basis.rows) {
            std::size_t lead = 0;
            while (lead < ambient_dim && b[lead] == 0) ++lead;
            if (lead == ambient_dim) continue;
            if (r[lead] != 0) {
                const Rational f = r[lead];
                for (std::size_t j = lead; j < ambient_dim; ++j) r[j] -= f * b[j];
            }
        }
        return is_zero_vec(r);
    }

    bool contains(const Subspace& other) const {
        for (const auto& b : other.basis.rows)
            if (!contains(b)) return false;
        return true;
    }

    bool operator==(const Subspace& o) const {
        return ambient_dim == o.ambient_dim && basis == o.basis;
    }
};

// Basis of {x : Mx = 0} in the canonical free-column parametrization:
// one basis vector per free column, with a 1 at that column.
inline Subspace kernel_basis(const Matrix& m_in) {
    Matrix m = m_in;
    const std::vector<std::size_t> pivots = rref_in_place(m);
    const std::size_t d = m.width;
    std::vector<bool> is_pivot(d, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<Vec> gens;
    for (std::size_t free = 0; free < d; ++free) {
        if (is_pivot[free]) continue;
        Vec v(d, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.rows[i][free];
        gens.push_back(std::move(v));
    }
    Subspace s;
    s.ambient_dim = d;
    s.basis = Matrix(d, std::move(gens));
    // gens are already independent; bring to RREF for canonical order/signs
    rref_in_place(s.basis);
    return s;
}

// Any exact solution of Ax = b, if one exists.
inline std::optional<Vec> solve_linear(const Matrix& a, const Vec& b) {
    if (b.size() != a.height()) throw input_error("solve: dimension mismatch");
    Matrix aug(a.width + 1);
    for (std::size_t i = 0; i < a.height(); ++i) {
        Vec r = a.rows[i];
        r.push_back(b[i]);
        aug.rows.push_back(std::move(r));
    }
    const auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == a.width) return std::nullopt;  // inconsistent
    Vec x(a.width, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.rows[i][a.width];
    return x;
}

// Orthogonal projection onto the orthogonal complement of L, as an exact
// d x d matrix  I - B^T (B B^T)^{-1} B  with B the basis rows of L.
struct Projector {
    Matrix matrix;  // d x d

    Vec operator()(const Vec& v) const { return matrix.apply(v); }
    std::size_t ambient_dim() const { return matrix.width; }
    bool operator==(const Projector& o) const { return matrix == o.matrix; }
};

inline Projector orthogonal_projector(const Subspace& l) {
    const std::size_t d = l.ambient_dim;
    if (l.dim() == 0) return Projector{Matrix::identity(d)};
    const Matrix& b = l.basis;
    const std::size_t n = b.height();
    // Gram matrix G = B B^T, solve G y = B v columnwise via G^{-1} B
    Matrix gram(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = dot(b.rows[i], b.rows[j]);
        gram.rows.push_back(std::move(row));
    }
    // compute G^{-1} by solving against identity columns
    Matrix ginv_cols(n);  // rows are solutions; G symmetric so transpose is fine
    for (std::size_t j = 0; j < n; ++j) {
        auto col = solve_linear(gram, unit_vec(n, j));
        if (!col) throw invariant_error("Gram matrix of an independent basis is singular");
        ginv_cols.rows.push_back(*col);
    }
    // P = I - B^T G^{-1} B
    Matrix p = Matrix::identity(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            Rational acc(0);
            for (std::size_t i = 0; i < n; ++i) {
                Rational inner(0);
                for (std::size_t j = 0; j < n; ++j) inner += ginv_cols.rows[i][j] * b.rows[j][c];
                acc += b.rows[i][r] * inner;
            }
            p.rows[r][c] -= acc;
        }
    }
    return Projector{std::move(p)};
}

}  // namespace hellycone

#endif  // HELLYCONE_LINALG_HPP
