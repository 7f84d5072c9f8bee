// Extensional finite posets: explicit relation matrix, Hasse covers, strict
// chain enumeration, DOT emission, and the alternating chain weights that
// drive virtual counts.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sprglue {

class FinitePoset {
  public:
    FinitePoset() = default;

    // Builds from an arbitrary relation and verifies reflexivity,
    // antisymmetry and transitivity (loudly, on construction).
    FinitePoset(std::vector<std::string> labels, std::vector<std::vector<char>> leq)
        : labels_(std::move(labels)), leq_(std::move(leq)) {
        const std::size_t m = labels_.size();
        if (m > 10000) throw std::invalid_argument("FinitePoset: too many elements");
        if (leq_.size() != m) throw std::invalid_argument("FinitePoset: relation size mismatch");
        for (auto& row : leq_)
            if (row.size() != m) throw std::invalid_argument("FinitePoset: relation size mismatch");
        for (std::size_t x = 0; x < m; ++x) {
            if (!leq_[x][x]) throw std::invalid_argument("FinitePoset: relation not reflexive");
            for (std::size_t y = 0; y < m; ++y) {
                if (x != y && leq_[x][y] && leq_[y][x])
                    throw std::invalid_argument("FinitePoset: relation not antisymmetric");
                if (!leq_[x][y]) continue;
                for (std::size_t z = 0; z < m; ++z)
                    if (leq_[y][z] && !leq_[x][z])
                        throw std::invalid_argument("FinitePoset: relation not transitive");
            }
        }
    }

    template <class T, class Leq>
    static FinitePoset build(const std::vector<T>& elems, Leq leq,
                             const std::function<std::string(const T&)>& label) {
        std::vector<std::string> labels;
        labels.reserve(elems.size());
        for (const auto& e : elems) labels.push_back(label(e));
        std::vector<std::vector<char>> rel(elems.size(), std::vector<char>(elems.size(), 0));
        for (std::size_t x = 0; x < elems.size(); ++x)
            for (std::size_t y = 0; y < elems.size(); ++y)
                rel[x][y] = leq(elems[x], elems[y]) ? 1 : 0;
        return FinitePoset(std::move(labels), std::move(rel));
    }

    int size() const { return static_cast<int>(labels_.size()); }
    bool leq(int x, int y) const { return leq_[x][y]; }
    bool lt(int x, int y) const { return x != y && leq_[x][y]; }
    const std::string& label(int x) const { return labels_[x]; }
    const std::vector<std::string>& labels() const { return labels_; }

  private:
    std::vector<std::string> labels_;
    std::vector<std::vector<char>> leq_;
};

// Covering pairs (x, y) with x covered by y, ordered by (x, y).
inline std::vector<std::pair<int, int>> hasse_edges(const FinitePoset& p) {
    std::vector<std::pair<int, int>> covers;
    for (int x = 0; x < p.size(); ++x) {
        for (int y = 0; y < p.size(); ++y) {
            if (!p.lt(x, y)) continue;
            bool cover = true;
            for (int z = 0; z < p.size(); ++z)
                if (p.lt(x, z) && p.lt(z, y)) { cover = false; break; }
            if (cover) covers.emplace_back(x, y);
        }
    }
    return covers;
}

// Deterministic DOT digraph: one node per element, one edge per cover.
inline std::string emit_dot(const FinitePoset& p, const std::string& graph_name = "poset") {
    std::string out = "digraph " + graph_name + " {\n";
    for (int x = 0; x < p.size(); ++x)
        out += "  n" + std::to_string(x) + " [label=\"" + p.label(x) + "\"];\n";
    for (auto [x, y] : hasse_edges(p))
        out += "  n" + std::to_string(x) + " -> n" + std::to_string(y) + ";\n";
    out += "}\n";
    return out;
}

// Every strictly increasing chain x_0 < ... < x_k (k >= 0), in lexicographic
// order of the index sequences. max_len caps the number of elements per chain.
inline std::vector<std::vector<int>> strict_chains(const FinitePoset& p,
                                                   std::optional<int> max_len = std::nullopt) {
    if (p.size() > 100) throw std::invalid_argument("strict_chains: poset too large");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> extend = [&](int last) {
        if (max_len && static_cast<int>(cur.size()) >= *max_len) return;
        for (int y = 0; y < p.size(); ++y) {
            if (!cur.empty() && !p.lt(last, y)) continue;
            cur.push_back(y);
            out.push_back(cur);
            extend(y);
            cur.pop_back();
        }
    };
    extend(-1);
    return out;
}

// Weights T with sum_{y >= x} T(y) = 1 for every x; equivalently
// T(x) = sum over chains starting at x of (-1)^(chain length - 1).
// The alternating chain sum of any diagram is then sum_x T(x) * value(x).
inline std::vector<long long> chain_weights(const FinitePoset& p) {
    int m = p.size();
    std::vector<int> above(m, 0);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (p.lt(x, y)) ++above[x];
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return above[a] != above[b] ? above[a] < above[b] : a < b;
    });
    std::vector<long long> t(m, 0);
    for (int x : order) {
        long long s = 1;
        for (int y = 0; y < m; ++y)
            if (p.lt(x, y)) s -= t[y];
        t[x] = s;
    }
    return t;
}

}  // namespace sprglue
