// Type-A root system and Weyl group primitives for GL_n: permutations,
// inversion length, root actions, Bruhat order, parabolic subsets and
// minimal double-coset representatives.
//
// Conventions used throughout the library:
//   * simple indices are 1-based, I = {1, ..., n-1};
//   * a root (i, j) with i != j stands for e_i - e_j, positive iff i < j;
//   * permutations are stored one-indexed in image form;
//   * composition is (u * w)(k) = u(w(k)).

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace sprglue {

// Subset J of the simple indices of GL_n. J = I is the full group G,
// J = {} is the Borel B.
struct Parabolic {
    int n = 0;            // ambient rank: group is GL_n
    std::uint32_t mask = 0;  // bit (i-1) set iff simple index i lies in J

    Parabolic() = default;
    Parabolic(int n_, std::uint32_t mask_) : n(n_), mask(mask_) {
        if (n < 1) throw std::invalid_argument("Parabolic: n must be >= 1");
        if (mask & ~full_mask(n)) throw std::invalid_argument("Parabolic: index out of range");
    }

    static std::uint32_t full_mask(int n) {
        return n >= 2 ? ((1u << (n - 1)) - 1u) : 0u;
    }
    static Parabolic borel(int n) { return Parabolic(n, 0); }
    static Parabolic group(int n) { return Parabolic(n, full_mask(n)); }
    static Parabolic from_indices(int n, const std::vector<int>& js) {
        std::uint32_t m = 0;
        for (int j : js) {
            if (j < 1 || j > n - 1) throw std::invalid_argument("Parabolic: index out of range");
            m |= 1u << (j - 1);
        }
        return Parabolic(n, m);
    }

    bool contains(int i) const { return i >= 1 && i <= n - 1 && (mask >> (i - 1)) & 1u; }
    bool subset_of(const Parabolic& other) const { return (mask & ~other.mask) == 0; }
    bool is_group() const { return mask == full_mask(n); }
    bool is_proper() const { return !is_group(); }
    int size() const { return __builtin_popcount(mask); }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 1; i <= n - 1; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    // "B", "G", or "P" followed by the member indices, e.g. P13 for J = {1,3}.
    std::string name() const {
        if (is_group()) return "G";
        if (mask == 0) return "B";
        std::string s = "P";
        for (int i : indices()) s += std::to_string(i);
        return s;
    }

    friend bool operator==(const Parabolic& a, const Parabolic& b) {
        return a.n == b.n && a.mask == b.mask;
    }
    friend bool operator!=(const Parabolic& a, const Parabolic& b) { return !(a == b); }
    friend bool operator<(const Parabolic& a, const Parabolic& b) {
        return a.n != b.n ? a.n < b.n : a.mask < b.mask;
    }
};

// e_i - e_j with i != j.
struct Root {
    int i = 0;
    int j = 0;
    bool positive() const { return i < j; }
    friend bool operator==(const Root& a, const Root& b) { return a.i == b.i && a.j == b.j; }
};

// Element of W = S_n in one-indexed image form: img[k] = w(k+1).
struct WeylPerm {
    std::vector<int> img;

    WeylPerm() = default;
    explicit WeylPerm(std::vector<int> images) : img(std::move(images)) {
        std::vector<char> seen(img.size() + 1, 0);
        for (int v : img) {
            if (v < 1 || v > static_cast<int>(img.size()) || seen[v])
                throw std::invalid_argument("WeylPerm: images must be a bijection of 1..n");
            seen[v] = 1;
        }
    }

    int degree() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[i - 1]; }

    bool is_identity() const {
        for (int k = 1; k <= degree(); ++k)
            if (img[k - 1] != k) return false;
        return true;
    }

    WeylPerm inverse() const {
        std::vector<int> inv(img.size());
        for (int k = 1; k <= degree(); ++k) inv[img[k - 1] - 1] = k;
        WeylPerm r;
        r.img = std::move(inv);
        return r;
    }

    std::string to_string() const {
        std::string s = "[";
        for (int k = 0; k < degree(); ++k) {
            if (k) s += ",";
            s += std::to_string(img[k]);
        }
        return s + "]";
    }

    friend bool operator==(const WeylPerm& a, const WeylPerm& b) { return a.img == b.img; }
    friend bool operator!=(const WeylPerm& a, const WeylPerm& b) { return !(a == b); }
    friend bool operator<(const WeylPerm& a, const WeylPerm& b) { return a.img < b.img; }
};

inline WeylPerm weyl_identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    WeylPerm w;
    w.img = std::move(v);
    return w;
}

inline WeylPerm longest_element(int n) {
    std::vector<int> v(n);
    for (int k = 0; k < n; ++k) v[k] = n - k;
    WeylPerm w;
    w.img = std::move(v);
    return w;
}

inline WeylPerm simple_reflection(int n, int i) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("simple_reflection: index out of range");
    WeylPerm w = weyl_identity(n);
    std::swap(w.img[i - 1], w.img[i]);
    return w;
}

// (u * w)(k) = u(w(k)).
inline WeylPerm operator*(const WeylPerm& u, const WeylPerm& w) {
    if (u.degree() != w.degree()) throw std::invalid_argument("compose: degree mismatch");
    WeylPerm r;
    r.img.resize(u.degree());
    for (int k = 0; k < u.degree(); ++k) r.img[k] = u.img[w.img[k] - 1];
    return r;
}

// All n! elements in lexicographic order of the image sequence.
inline std::vector<WeylPerm> enumerate_weyl(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("enumerate_weyl: need 1 <= n <= 6");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<WeylPerm> out;
    do {
        WeylPerm w;
        w.img = v;
        out.push_back(std::move(w));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// Number of inversions.
inline int length(const WeylPerm& w) {
    int n = w.degree(), inv = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (w.img[a] > w.img[b]) ++inv;
    return inv;
}

// w(alpha_i) = e_{w(i)} - e_{w(i+1)}.
inline Root act_on_simple(const WeylPerm& w, int i) {
    if (i < 1 || i > w.degree() - 1) throw std::invalid_argument("act_on_simple: index out of range");
    return Root{w(i), w(i + 1)};
}

// Membership of e_i - e_j in R_J: i and j must lie in the same maximal run
// of J-adjacent nodes, i.e. every simple index between them belongs to J.
inline bool in_levi_span(const Root& r, const Parabolic& J) {
    int lo = std::min(r.i, r.j), hi = std::max(r.i, r.j);
    if (lo < 1 || hi > J.n || lo == hi) throw std::invalid_argument("in_levi_span: bad root");
    for (int k = lo; k < hi; ++k)
        if (!J.contains(k)) return false;
    return true;
}

// ell(s_i w) < ell(w), i.e. w^{-1}(alpha_i) is negative.
inline bool has_left_descent(const WeylPerm& w, int i) {
    WeylPerm wi = w.inverse();
    return wi(i) > wi(i + 1);
}

// ell(w s_i) < ell(w), i.e. w(alpha_i) is negative.
inline bool has_right_descent(const WeylPerm& w, int i) {
    return w(i) > w(i + 1);
}

// Bruhat order via the rank-matrix dominance criterion:
// u <= w iff #{a <= i : u(a) >= j} <= #{a <= i : w(a) >= j} for all i, j.
inline bool bruhat_leq(const WeylPerm& u, const WeylPerm& w) {
    int n = u.degree();
    if (w.degree() != n) throw std::invalid_argument("bruhat_leq: degree mismatch");
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int cu = 0, cw = 0;
            for (int a = 1; a <= i; ++a) {
                if (u(a) >= j) ++cu;
                if (w(a) >= j) ++cw;
            }
            if (cu > cw) return false;
        }
    }
    return true;
}

inline bool bruhat_lt(const WeylPerm& u, const WeylPerm& w) {
    return !(u == w) && bruhat_leq(u, w);
}

// Unique minimal-length element of W_{J_left} w W_{J_right}, by greedy
// descent stripping on both sides.
inline WeylPerm min_double_coset_rep(const Parabolic& J_left, WeylPerm w, const Parabolic& J_right) {
    if (J_left.n != w.degree() || J_right.n != w.degree())
        throw std::invalid_argument("min_double_coset_rep: rank mismatch");
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i : J_left.indices()) {
            if (has_left_descent(w, i)) {
                w = simple_reflection(w.degree(), i) * w;
                changed = true;
            }
        }
        for (int j : J_right.indices()) {
            if (has_right_descent(w, j)) {
                w = w * simple_reflection(w.degree(), j);
                changed = true;
            }
        }
    }
    return w;
}

}  // namespace sprglue
