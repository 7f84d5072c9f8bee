// Small prime fields and exact row-echelon linear algebra. Subspaces are
// always kept in reduced row-echelon form, which makes the representation
// canonical: two subspaces are equal iff their matrices are.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sprglue {

inline bool is_prime_le31(int q) {
    switch (q) {
        case 2: case 3: case 5: case 7: case 11: case 13:
        case 17: case 19: case 23: case 29: case 31:
            return true;
        default:
            return false;
    }
}

struct PrimeFieldElem {
    int q = 2;
    int v = 0;

    PrimeFieldElem() = default;
    PrimeFieldElem(int q_, long long v_) : q(q_) {
        if (!is_prime_le31(q)) throw std::invalid_argument("PrimeFieldElem: q must be a prime <= 31");
        v = static_cast<int>(((v_ % q) + q) % q);
    }

    PrimeFieldElem inv() const {
        if (v == 0) throw std::domain_error("PrimeFieldElem: inverse of zero");
        // q is tiny, scan
        for (int x = 1; x < q; ++x)
            if ((x * v) % q == 1) return PrimeFieldElem(q, x);
        throw std::logic_error("PrimeFieldElem: no inverse");
    }

    friend PrimeFieldElem operator+(PrimeFieldElem a, PrimeFieldElem b) { return {a.q, a.v + b.v}; }
    friend PrimeFieldElem operator-(PrimeFieldElem a, PrimeFieldElem b) { return {a.q, a.v - b.v}; }
    friend PrimeFieldElem operator*(PrimeFieldElem a, PrimeFieldElem b) { return {a.q, a.v * b.v}; }
    friend PrimeFieldElem operator/(PrimeFieldElem a, PrimeFieldElem b) { return a * b.inv(); }
    friend bool operator==(PrimeFieldElem a, PrimeFieldElem b) { return a.q == b.q && a.v == b.v; }
};

// Dense matrix over F_q with byte entries.
class FqMatrix {
  public:
    FqMatrix() = default;
    FqMatrix(int q, int rows, int cols)
        : q_(q), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {
        if (!is_prime_le31(q)) throw std::invalid_argument("FqMatrix: q must be a prime <= 31");
    }

    static FqMatrix from_rows(int q, const std::vector<std::vector<int>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r ? static_cast<int>(rows[0].size()) : 0;
        FqMatrix m(q, r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<std::uint8_t>(((rows[i][j] % q) + q) % q);
        return m;
    }

    int q() const { return q_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint8_t& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::uint8_t at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::vector<int> row(int r) const {
        std::vector<int> out(cols_);
        for (int j = 0; j < cols_; ++j) out[j] = at(r, j);
        return out;
    }

    bool is_zero() const {
        for (std::uint8_t x : a_) if (x) return false;
        return true;
    }

    // In-place reduced row echelon form; returns the rank. Zero rows are dropped.
    int rref() {
        int piv_row = 0;
        for (int col = 0; col < cols_ && piv_row < rows_; ++col) {
            int sel = -1;
            for (int r = piv_row; r < rows_; ++r)
                if (at(r, col)) { sel = r; break; }
            if (sel < 0) continue;
            swap_rows(sel, piv_row);
            int inv = inv_mod(at(piv_row, col));
            scale_row(piv_row, inv);
            for (int r = 0; r < rows_; ++r) {
                if (r == piv_row) continue;
                int f = at(r, col);
                if (f) add_multiple(r, piv_row, q_ - f);
            }
            ++piv_row;
        }
        rows_ = piv_row;
        a_.resize(static_cast<std::size_t>(rows_) * cols_);
        return piv_row;
    }

    int rank() const {
        FqMatrix c = *this;
        return c.rref();
    }

    // Pivot columns; valid on a matrix already in rref.
    std::vector<int> pivot_columns() const {
        std::vector<int> out;
        for (int r = 0; r < rows_; ++r) {
            for (int c = 0; c < cols_; ++c)
                if (at(r, c)) { out.push_back(c); break; }
        }
        return out;
    }

    FqMatrix stacked(const FqMatrix& other) const {
        if (other.cols_ != cols_ || other.q_ != q_)
            throw std::invalid_argument("FqMatrix::stacked: shape mismatch");
        FqMatrix m(q_, rows_ + other.rows_, cols_);
        m.a_ = a_;
        m.a_.insert(m.a_.end(), other.a_.begin(), other.a_.end());
        return m;
    }

    // Reduce v against the rows (assumed rref); returns the residue.
    std::vector<int> reduce(std::vector<int> v) const {
        for (int r = 0; r < rows_; ++r) {
            int p = -1;
            for (int c = 0; c < cols_; ++c)
                if (at(r, c)) { p = c; break; }
            if (p < 0) continue;
            int f = v[p] % q_;
            if (f) {
                for (int c = 0; c < cols_; ++c)
                    v[c] = (v[c] + (q_ - f) * at(r, c)) % q_;
            }
        }
        for (int& x : v) x %= q_;
        return v;
    }

    bool contains_vector(const std::vector<int>& v) const {
        for (int x : reduce(v)) if (x % q_) return false;
        return true;
    }

    bool contains_subspace(const FqMatrix& sub) const {
        for (int r = 0; r < sub.rows(); ++r)
            if (!contains_vector(sub.row(r))) return false;
        return true;
    }

    // Matrix-vector product A v.
    std::vector<int> apply(const std::vector<int>& v) const {
        std::vector<int> out(rows_, 0);
        for (int r = 0; r < rows_; ++r) {
            int s = 0;
            for (int c = 0; c < cols_; ++c) s += at(r, c) * v[c];
            out[r] = s % q_;
        }
        return out;
    }

    FqMatrix multiply(const FqMatrix& other) const {
        if (cols_ != other.rows_) throw std::invalid_argument("FqMatrix::multiply: shape mismatch");
        FqMatrix m(q_, rows_, other.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                int aik = at(i, k);
                if (!aik) continue;
                for (int j = 0; j < other.cols_; ++j)
                    m.at(i, j) = static_cast<std::uint8_t>((m.at(i, j) + aik * other.at(k, j)) % q_);
            }
        return m;
    }

    friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
        return a.q_ == b.q_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const FqMatrix& a, const FqMatrix& b) { return !(a == b); }
    friend bool operator<(const FqMatrix& a, const FqMatrix& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        return a.a_ < b.a_;
    }

  private:
    int inv_mod(int x) const {
        for (int y = 1; y < q_; ++y)
            if ((x * y) % q_ == 1) return y;
        throw std::logic_error("FqMatrix: no inverse");
    }
    void swap_rows(int r1, int r2) {
        for (int c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
    }
    void scale_row(int r, int f) {
        for (int c = 0; c < cols_; ++c) at(r, c) = static_cast<std::uint8_t>((at(r, c) * f) % q_);
    }
    void add_multiple(int dst, int src, int f) {
        for (int c = 0; c < cols_; ++c)
            at(dst, c) = static_cast<std::uint8_t>((at(dst, c) + f * at(src, c)) % q_);
    }

    int q_ = 2;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint8_t> a_;
};

// Enumeration budget shared across one counting task.  The cap bounds the
// number of candidate subspaces constructed; exceeding it is an error, never
// silent truncation.
struct Budget {
    long long cap = 10'000'000;
    long long used = 0;

    void charge(long long k = 1) {
        used += k;
        if (used > cap) throw std::runtime_error("enumeration budget exceeded");
    }
};

namespace detail {

// All k x m reduced echelon matrices over F_q, i.e. all k-dim subspaces of
// F_q^m in canonical form.  Deterministic order: pivot sets lexicographic,
// then free entries as little-endian counters.
inline void for_each_rref(int q, int m, int k, Budget& budget,
                          const std::function<void(const FqMatrix&)>& fn) {
    if (k == 0) {
        budget.charge();
        fn(FqMatrix(q, 0, m));
        return;
    }
    if (k > m) return;
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) piv[i] = i;
    auto run_pivots = [&]() {
        // free positions: (row i, col j) with j > piv[i], j not a pivot
        std::vector<std::pair<int, int>> free_pos;
        std::vector<char> is_piv(m, 0);
        for (int p : piv) is_piv[p] = 1;
        for (int i = 0; i < k; ++i)
            for (int j = piv[i] + 1; j < m; ++j)
                if (!is_piv[j]) free_pos.emplace_back(i, j);
        std::vector<int> vals(free_pos.size(), 0);
        while (true) {
            budget.charge();
            FqMatrix mat(q, k, m);
            for (int i = 0; i < k; ++i) mat.at(i, piv[i]) = 1;
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                mat.at(free_pos[t].first, free_pos[t].second) = static_cast<std::uint8_t>(vals[t]);
            fn(mat);
            std::size_t t = 0;
            while (t < vals.size() && vals[t] == q - 1) vals[t++] = 0;
            if (t == vals.size()) break;
            ++vals[t];
        }
    };
    // iterate pivot combinations in lexicographic order
    while (true) {
        run_pivots();
        int i = k - 1;
        while (i >= 0 && piv[i] == m - k + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
}

}  // namespace detail

// All d-dimensional subspaces of F_q^m.
inline std::vector<FqMatrix> all_subspaces(int q, int m, int d, Budget& budget) {
    std::vector<FqMatrix> out;
    detail::for_each_rref(q, m, d, budget, [&](const FqMatrix& s) { out.push_back(s); });
    return out;
}

// All subspaces W of dimension d with U <= W <= F_q^n, via the quotient by U.
// U must be in rref.  Each W is returned in rref.
inline void for_each_extension(const FqMatrix& U, int d, Budget& budget,
                               const std::function<void(const FqMatrix&)>& fn) {
    int n = U.cols();
    int u = U.rows();
    int k = d - u;
    if (k < 0 || d > n) return;
    if (k == 0) {
        budget.charge();
        fn(U);
        return;
    }
    std::vector<int> non_pivots;
    {
        std::vector<char> is_piv(n, 0);
        for (int p : U.pivot_columns()) is_piv[p] = 1;
        for (int c = 0; c < n; ++c)
            if (!is_piv[c]) non_pivots.push_back(c);
    }
    int m = static_cast<int>(non_pivots.size());  // = n - u
    detail::for_each_rref(U.q(), m, k, budget, [&](const FqMatrix& qmat) {
        // lift quotient rows into the non-pivot coordinates, stack onto U
        FqMatrix w(U.q(), u + k, n);
        for (int r = 0; r < u; ++r)
            for (int c = 0; c < n; ++c) w.at(r, c) = U.at(r, c);
        for (int r = 0; r < k; ++r)
            for (int t = 0; t < m; ++t) w.at(u + r, non_pivots[t]) = qmat.at(r, t);
        w.rref();
        fn(w);
    });
}

}  // namespace sprglue
