// Nilpotent data for gl_n with trivial local system: Jordan types, the
// weight sequence of an sl2-triple through the nilpotent, the induced
// parabolic P_0, the coset-representative set W' with its maximum, and the
// sign tri-partition of the simple indices attached to (w, J_0).

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "weyl.hpp"

namespace sprglue {

// Partition of n, weakly decreasing positive parts.
struct JordanType {
    std::vector<int> parts;

    JordanType() = default;
    explicit JordanType(std::vector<int> p) : parts(std::move(p)) {
        if (parts.empty()) throw std::invalid_argument("JordanType: empty partition");
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (parts[k] <= 0) throw std::invalid_argument("JordanType: parts must be positive");
            if (k > 0 && parts[k] > parts[k - 1])
                throw std::invalid_argument("JordanType: parts must be weakly decreasing");
        }
    }

    int n() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }

    bool is_zero_orbit() const {  // lambda = (1, ..., 1)
        return parts[0] == 1;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(parts[k]);
        }
        return s + ")";
    }

    friend bool operator==(const JordanType& a, const JordanType& b) { return a.parts == b.parts; }
    friend bool operator<(const JordanType& a, const JordanType& b) { return a.parts < b.parts; }
};

inline std::vector<JordanType> all_partitions(int n) {
    std::vector<JordanType> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

struct JMData {
    std::vector<int> h_weights;      // weakly decreasing, sums to zero
    Parabolic J0;                    // {i : h_i = h_{i+1}}
    Parabolic P0;                    // the standard parabolic with J_{P0} = J0
    std::vector<int> ref_flag_dims;  // proper dimension jumps of the weight filtration
};

// Weight sequence: each part p contributes {p-1, p-3, ..., 1-p}; the union
// is sorted descending. J0 marks the repeated positions.
inline JMData jm_data(const JordanType& lambda) {
    int n = lambda.n();
    if (n > 6) throw std::invalid_argument("jm_data: n must be <= 6");
    std::vector<int> h;
    for (int p : lambda.parts)
        for (int t = p - 1; t >= 1 - p; t -= 2) h.push_back(t);
    std::sort(h.begin(), h.end(), std::greater<int>());

    std::uint32_t j0 = 0;
    std::vector<int> dims;
    for (int i = 1; i <= n - 1; ++i) {
        if (h[i - 1] == h[i])
            j0 |= 1u << (i - 1);
        else
            dims.push_back(i);
    }
    JMData d;
    d.h_weights = std::move(h);
    d.J0 = Parabolic(n, j0);
    d.P0 = d.J0;
    d.ref_flag_dims = std::move(dims);
    return d;
}

struct WPrimeData {
    std::vector<WeylPerm> elements;  // in lexicographic order
    WeylPerm w0p;                    // the unique length-maximal element
};

// W' = {w : w^{-1}(alpha_j) is positive for every j in J0}; these are the
// minimal-length representatives of the cosets W_{J0} \ W.
inline WPrimeData w_prime(int n, const Parabolic& J0) {
    if (J0.n != n) throw std::invalid_argument("w_prime: rank mismatch");
    WPrimeData out;
    for (const WeylPerm& w : enumerate_weyl(n)) {
        bool ok = true;
        for (int j : J0.indices()) {
            if (!act_on_simple(w.inverse(), j).positive()) { ok = false; break; }
        }
        if (ok) out.elements.push_back(w);
    }
    int best = -1;
    int ties = 0;
    for (const WeylPerm& w : out.elements) {
        int l = length(w);
        if (l > best) { best = l; out.w0p = w; ties = 1; }
        else if (l == best) ++ties;
    }
    if (ties != 1)
        throw std::runtime_error("w_prime: length-maximal element is not unique");
    return out;
}

inline bool in_w_prime(const WeylPerm& w, const Parabolic& J0) {
    for (int j : J0.indices())
        if (!act_on_simple(w.inverse(), j).positive()) return false;
    return true;
}

// I = I0 | I+ | I-, by where w sends each simple root relative to R_{J0}.
struct TriPartition {
    int n = 0;
    std::uint32_t I0 = 0, Iplus = 0, Iminus = 0;

    bool in_I0(int i) const { return (I0 >> (i - 1)) & 1u; }
    bool in_plus(int i) const { return (Iplus >> (i - 1)) & 1u; }
    bool in_minus(int i) const { return (Iminus >> (i - 1)) & 1u; }
};

inline TriPartition tri_partition(const WeylPerm& w, const Parabolic& J0) {
    if (J0.n != w.degree()) throw std::invalid_argument("tri_partition: rank mismatch");
    TriPartition t;
    t.n = w.degree();
    for (int i = 1; i <= t.n - 1; ++i) {
        Root r = act_on_simple(w, i);
        if (in_levi_span(r, J0))
            t.I0 |= 1u << (i - 1);
        else if (r.positive())
            t.Iplus |= 1u << (i - 1);
        else
            t.Iminus |= 1u << (i - 1);
    }
    return t;
}

// Nilpotent matrix of the given Jordan type, written in the basis reordered
// by descending weight (ties broken by part index).  Entries are 0/1; the
// matrix raises weight by exactly 2, so it preserves the weight filtration
// with a strict drop through each step.
inline std::vector<std::vector<int>> jordan_matrix(const JordanType& lambda) {
    int n = lambda.n();
    // slot: (weight, part, position-within-part), position 1..p has weight p+1-2k
    struct Slot { int weight, part, pos; };
    std::vector<Slot> slots;
    for (std::size_t part = 0; part < lambda.parts.size(); ++part) {
        int p = lambda.parts[part];
        for (int k = 1; k <= p; ++k)
            slots.push_back({p + 1 - 2 * k, static_cast<int>(part), k});
    }
    std::stable_sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        return a.part < b.part;
    });
    std::map<std::pair<int, int>, int> index;  // (part, pos) -> basis index
    for (int idx = 0; idx < n; ++idx) index[{slots[idx].part, slots[idx].pos}] = idx;

    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int idx = 0; idx < n; ++idx) {
        const Slot& s = slots[idx];
        if (s.pos >= 2) a[index[{s.part, s.pos - 1}]][idx] = 1;  // A e_{(part,pos)} = e_{(part,pos-1)}
    }
    return a;
}

// Jordan type recovered from the rank sequence of powers (integer arithmetic;
// the matrix is 0/1 and nilpotent, so ranks agree over every field).
inline JordanType jordan_type_of_ranks(const std::vector<int>& ranks, int n) {
    // ranks[k] = rank(A^k) with ranks[0] = n, listed until the ranks reach 0;
    // multiplicity of part k is r_{k-1} - 2 r_k + r_{k+1}.
    auto r = [&](int k) {
        return k < static_cast<int>(ranks.size()) ? ranks[k] : 0;
    };
    std::vector<int> parts;
    for (int k = 1; k <= static_cast<int>(ranks.size()); ++k) {
        int mult = r(k - 1) - 2 * r(k) + r(k + 1);
        for (int c = 0; c < mult; ++c) parts.push_back(k);
    }
    std::sort(parts.rbegin(), parts.rend());
    JordanType t(parts);
    if (t.n() != n) throw std::runtime_error("jordan_type_of_ranks: inconsistent ranks");
    return t;
}

}  // namespace sprglue
