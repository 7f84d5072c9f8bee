// Partial flags over small prime fields and Springer-fiber point counting.
//
// A flag of type P (standard parabolic with index set J_P) has step
// dimensions equal to the complement of J_P in {1, ..., n-1}.  Fibers are
// enumerated by a depth-first walk over the subspace chain; the nilpotent
// condition is tested incrementally on each partial chain, so violating
// branches are pruned as early as they can be.

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fq.hpp"
#include "nilpotent.hpp"
#include "parabolic_posets.hpp"
#include "polynomial.hpp"
#include "weyl.hpp"

namespace sprglue {

// Sorted complement of J in {1, ..., n-1}: the proper step dimensions of a
// flag with stabilizer of type J.
inline std::vector<int> flag_type_of(const Parabolic& J, int n) {
    if (J.n != n) throw std::invalid_argument("flag_type_of: rank mismatch");
    std::vector<int> dims;
    for (int i = 1; i <= n - 1; ++i)
        if (!J.contains(i)) dims.push_back(i);
    return dims;
}

// Nested chain of subspaces in canonical echelon form.
struct FlagFq {
    int q = 2;
    int n = 0;
    std::vector<int> dims;        // strictly increasing, proper (no 0, no n)
    std::vector<FqMatrix> steps;  // steps[k] is dims[k] x n, in rref

    FlagFq() = default;
    FlagFq(int q_, int n_, std::vector<int> dims_, std::vector<FqMatrix> steps_)
        : q(q_), n(n_), dims(std::move(dims_)), steps(std::move(steps_)) {
        if (dims.size() != steps.size()) throw std::invalid_argument("FlagFq: size mismatch");
        int prev = 0;
        for (std::size_t k = 0; k < dims.size(); ++k) {
            if (dims[k] <= prev || dims[k] >= n) throw std::invalid_argument("FlagFq: bad dims");
            if (steps[k].rows() != dims[k] || steps[k].cols() != n)
                throw std::invalid_argument("FlagFq: step shape mismatch");
            if (k > 0 && !steps[k].contains_subspace(steps[k - 1]))
                throw std::invalid_argument("FlagFq: steps not nested");
            prev = dims[k];
        }
    }

    friend bool operator==(const FlagFq& a, const FlagFq& b) {
        return a.q == b.q && a.n == b.n && a.dims == b.dims && a.steps == b.steps;
    }
    friend bool operator<(const FlagFq& a, const FlagFq& b) {
        if (a.dims != b.dims) return a.dims < b.dims;
        return a.steps < b.steps;
    }
};

// Sub-flag at the given dimensions (which must be among f's).
inline FlagFq coarsen(const FlagFq& f, const std::vector<int>& dims) {
    std::vector<FqMatrix> steps;
    for (int d : dims) {
        auto it = std::find(f.dims.begin(), f.dims.end(), d);
        if (it == f.dims.end()) throw std::invalid_argument("coarsen: dimension not present");
        steps.push_back(f.steps[it - f.dims.begin()]);
    }
    return FlagFq(f.q, f.n, dims, std::move(steps));
}

enum class SpringerKind { parabolic, unipotent };

inline FqMatrix jordan_matrix_fq(const JordanType& lambda, int q) {
    return FqMatrix::from_rows(q, jordan_matrix(lambda));
}

// The weight filtration of the Jordan basis, i.e. the coordinate flag at the
// jump dimensions.  Its stabilizer has type J0.
inline FlagFq reference_flag(const JordanType& lambda, int q) {
    JMData d = jm_data(lambda);
    int n = lambda.n();
    std::vector<FqMatrix> steps;
    for (int dim : d.ref_flag_dims) {
        FqMatrix m(q, dim, n);
        for (int r = 0; r < dim; ++r) m.at(r, r) = 1;
        steps.push_back(m);
    }
    return FlagFq(q, n, d.ref_flag_dims, std::move(steps));
}

// Full coordinate flag in the Jordan basis order.
inline FlagFq reference_full_flag(const JordanType& lambda, int q) {
    int n = lambda.n();
    std::vector<int> dims;
    std::vector<FqMatrix> steps;
    for (int dim = 1; dim <= n - 1; ++dim) {
        FqMatrix m(q, dim, n);
        for (int r = 0; r < dim; ++r) m.at(r, r) = 1;
        dims.push_back(dim);
        steps.push_back(m);
    }
    return FlagFq(q, n, dims, std::move(steps));
}

namespace detail {

// A v subset W for every basis row v of V?
inline bool maps_into(const FqMatrix& A, const FqMatrix& V, const FqMatrix& W) {
    for (int r = 0; r < V.rows(); ++r) {
        std::vector<int> v = V.row(r);
        std::vector<int> av(A.rows(), 0);
        for (int i = 0; i < A.rows(); ++i) {
            int s = 0;
            for (int j = 0; j < A.cols(); ++j) s += A.at(i, j) * v[j];
            av[i] = s % A.q();
        }
        if (!W.contains_vector(av)) return false;
    }
    return true;
}

inline bool kills(const FqMatrix& A, const FqMatrix& V) {
    for (int r = 0; r < V.rows(); ++r) {
        std::vector<int> v = V.row(r);
        for (int i = 0; i < A.rows(); ++i) {
            int s = 0;
            for (int j = 0; j < A.cols(); ++j) s += A.at(i, j) * v[j];
            if (s % A.q()) return false;
        }
    }
    return true;
}

inline bool image_contained(const FqMatrix& A, const FqMatrix& W) {
    // column space of A inside W
    for (int j = 0; j < A.cols(); ++j) {
        std::vector<int> col(A.rows());
        for (int i = 0; i < A.rows(); ++i) col[i] = A.at(i, j);
        if (!W.contains_vector(col)) return false;
    }
    return true;
}

struct SpringerTask {
    int n = 0, q = 2;
    FqMatrix A;
    std::vector<int> qdims;              // chain dimensions being enumerated
    std::vector<int> pdims;              // the coarsening dimensions carrying the condition
    SpringerKind kind = SpringerKind::unipotent;
    // fixed[d], when present, pins the step at dimension d to a known subspace
    std::map<int, FqMatrix> fixed;
};

// For the unipotent condition the step at dimension d must map into the
// coarsening step strictly below nextP(d); for the parabolic condition the
// coarsening steps must be preserved.  Returns false to prune the branch.
inline bool step_admissible(const SpringerTask& t, const std::vector<FqMatrix>& built,
                            const std::vector<int>& built_dims, const FqMatrix& cand, int d) {
    auto step_at = [&](int dim) -> const FqMatrix& {
        static thread_local FqMatrix zero;
        if (dim == 0) {
            zero = FqMatrix(t.q, 0, t.n);
            return zero;
        }
        for (std::size_t k = 0; k < built_dims.size(); ++k)
            if (built_dims[k] == dim) return built[k];
        throw std::logic_error("step_admissible: missing step");
    };
    if (t.kind == SpringerKind::unipotent) {
        // D = smallest coarsening dim >= d (or n), D' = largest coarsening dim < D
        int D = t.n;
        for (int p : t.pdims)
            if (p >= d) { D = p; break; }
        int Dprime = 0;
        for (int p : t.pdims)
            if (p < D) Dprime = p;
        if (Dprime == 0) {
            if (!kills(t.A, cand)) return false;
        } else if (!maps_into(t.A, cand, step_at(Dprime))) {
            return false;
        }
        // once the top coarsening step exists, the whole space must map into it
        if (!t.pdims.empty() && d == t.pdims.back()) {
            if (!image_contained(t.A, cand)) return false;
        }
        return true;
    }
    // parabolic: preservation, testable exactly at the coarsening dims
    bool is_pdim = std::find(t.pdims.begin(), t.pdims.end(), d) != t.pdims.end();
    if (is_pdim && !maps_into(t.A, cand, cand)) return false;
    return true;
}

inline void springer_dfs(const SpringerTask& t, std::size_t level, std::vector<FqMatrix>& built,
                         std::vector<int>& built_dims, Budget& budget,
                         const std::function<void(const std::vector<FqMatrix>&)>& emit) {
    if (level == t.qdims.size()) {
        emit(built);
        return;
    }
    int d = t.qdims[level];
    const FqMatrix base = level == 0 ? FqMatrix(t.q, 0, t.n) : built.back();
    auto handle = [&](const FqMatrix& cand) {
        if (!step_admissible(t, built, built_dims, cand, d)) return;
        built.push_back(cand);
        built_dims.push_back(d);
        springer_dfs(t, level + 1, built, built_dims, budget, emit);
        built.pop_back();
        built_dims.pop_back();
    };
    auto it = t.fixed.find(d);
    if (it != t.fixed.end()) {
        budget.charge();
        if (it->second.contains_subspace(base)) handle(it->second);
        return;
    }
    for_each_extension(base, d, budget, handle);
}

}  // namespace detail

// Number of F_q-points of the Springer fiber attached to [P >= Q]:
// flags of type Q whose P-coarsening satisfies the nilpotent condition.
//   unipotent: A U_j <= U_{j-1} on the coarsening (with U_0 = 0, top step V);
//   parabolic: A U_j <= U_j (requires J_Q = J_P, i.e. the classical fiber).
// The zero orbit is counted combinatorially: the condition is vacuous.
inline long long count_springer(const Parabolic& P, const Parabolic& Q, const JordanType& lambda,
                                int q, SpringerKind kind, Budget& budget) {
    int n = lambda.n();
    if (P.n != n || Q.n != n) throw std::invalid_argument("count_springer: rank mismatch");
    if (!Q.subset_of(P)) throw std::invalid_argument("count_springer: need Q <= P");
    if (!is_prime_le31(q)) throw std::invalid_argument("count_springer: q must be a prime <= 31");
    if (kind == SpringerKind::parabolic && !(P == Q))
        throw std::invalid_argument("count_springer: parabolic kind expects Q = P");

    if (lambda.is_zero_orbit()) return flag_count_int(n, flag_type_of(Q, n), q);

    detail::SpringerTask t;
    t.n = n;
    t.q = q;
    t.A = jordan_matrix_fq(lambda, q);
    t.qdims = flag_type_of(Q, n);
    t.pdims = flag_type_of(P, n);
    t.kind = kind;
    if (kind == SpringerKind::unipotent && t.pdims.empty())
        return 0;  // A != 0 can never land in the zero nilradical

    long long count = 0;
    std::vector<FqMatrix> built;
    std::vector<int> built_dims;
    detail::springer_dfs(t, 0, built, built_dims, budget,
                         [&](const std::vector<FqMatrix>&) { ++count; });
    return count;
}

// Same fiber, materialized.
inline std::vector<FlagFq> enumerate_springer(const Parabolic& P, const Parabolic& Q,
                                              const JordanType& lambda, int q, SpringerKind kind,
                                              Budget& budget) {
    int n = lambda.n();
    if (!Q.subset_of(P)) throw std::invalid_argument("enumerate_springer: need Q <= P");
    detail::SpringerTask t;
    t.n = n;
    t.q = q;
    t.A = jordan_matrix_fq(lambda, q);
    t.qdims = flag_type_of(Q, n);
    t.pdims = flag_type_of(P, n);
    t.kind = kind;
    std::vector<FlagFq> out;
    if (kind == SpringerKind::unipotent && t.pdims.empty() && !lambda.is_zero_orbit()) return out;
    std::vector<FqMatrix> built;
    std::vector<int> built_dims;
    detail::springer_dfs(t, 0, built, built_dims, budget, [&](const std::vector<FqMatrix>& steps) {
        out.emplace_back(q, n, t.qdims, steps);
    });
    return out;
}

// Points of the [P >= Q] fiber whose coarsening to the given type-R flag is
// exactly `base` (used by the Levi recursion).  Requires P <= R.
inline long long count_springer_over(const Parabolic& P, const Parabolic& Q,
                                     const JordanType& lambda, int q, const FlagFq& base,
                                     Budget& budget) {
    int n = lambda.n();
    detail::SpringerTask t;
    t.n = n;
    t.q = q;
    t.A = jordan_matrix_fq(lambda, q);
    t.qdims = flag_type_of(Q, n);
    t.pdims = flag_type_of(P, n);
    t.kind = SpringerKind::unipotent;
    for (std::size_t k = 0; k < base.dims.size(); ++k) t.fixed[base.dims[k]] = base.steps[k];
    if (t.pdims.empty() && !lambda.is_zero_orbit()) return 0;

    long long count = 0;
    std::vector<FqMatrix> built;
    std::vector<int> built_dims;
    detail::springer_dfs(t, 0, built, built_dims, budget,
                         [&](const std::vector<FqMatrix>&) { ++count; });
    return count;
}

namespace detail {

// Completes a partial flag to a full flag by refining each gap with the rows
// of the next step (and finally the standard basis), one new direction at a
// time.  Deterministic.
inline std::vector<FqMatrix> complete_flag(const FlagFq& f) {
    int n = f.n, q = f.q;
    std::vector<FqMatrix> full;  // full[k] has k+1 rows
    FqMatrix cur(q, 0, n);
    auto absorb = [&](const std::vector<int>& v) {
        std::vector<int> res = cur.reduce(v);
        bool zero = true;
        for (int x : res) if (x % q) zero = false;
        if (zero) return;
        FqMatrix row(q, 1, n);
        for (int c = 0; c < n; ++c) row.at(0, c) = static_cast<std::uint8_t>(((res[c] % q) + q) % q);
        cur = cur.stacked(row);
        cur.rref();
        if (cur.rows() < n) full.push_back(cur);
    };
    for (const FqMatrix& step : f.steps)
        for (int r = 0; r < step.rows(); ++r) absorb(step.row(r));
    for (int j = 0; j < n; ++j) {
        std::vector<int> e(n, 0);
        e[j] = 1;
        absorb(e);
    }
    return full;  // n-1 proper steps
}

// Incidence permutation u of two full flags, characterized by
//   dim(R_i  ^  F_j) = #{a <= j : u(a) <= i},
// i.e. u sends the position of each new F-direction to the R-level where it
// first appears.
inline WeylPerm incidence_perm(const std::vector<FqMatrix>& ref_full,
                               const std::vector<FqMatrix>& f_full, int n) {
    auto dim_cap = [&](int i, int j) -> int {
        if (i == 0 || j == 0) return 0;
        if (i == n) return j;
        if (j == n) return i;
        return i + j - ref_full[i - 1].stacked(f_full[j - 1]).rref();
    };
    std::vector<int> img(n, 0);
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= n; ++i) {
            int second_diff = dim_cap(i, j) - dim_cap(i - 1, j) - dim_cap(i, j - 1) + dim_cap(i - 1, j - 1);
            if (second_diff == 1) {
                img[j - 1] = i;
                break;
            }
        }
    }
    return WeylPerm(img);
}

}  // namespace detail

// Relative position of a flag against the reference flag of type J0, as the
// minimal-length representative of W_{J_f} u W_{J0}.  The output has no left
// descent in J_f and no right descent in J0, and does not depend on how
// either partial flag is completed.
inline WeylPerm relpos(const FlagFq& f, const FlagFq& ref, const Parabolic& J0) {
    if (f.n != ref.n || f.q != ref.q) throw std::invalid_argument("relpos: shape mismatch");
    int n = f.n;
    std::vector<FqMatrix> f_full = detail::complete_flag(f);
    std::vector<FqMatrix> ref_full = detail::complete_flag(ref);
    WeylPerm u = detail::incidence_perm(ref_full, f_full, n);
    std::vector<int> f_dims = f.dims;
    std::uint32_t jf = 0;
    for (int i = 1; i <= n - 1; ++i)
        if (std::find(f_dims.begin(), f_dims.end(), i) == f_dims.end()) jf |= 1u << (i - 1);
    return min_double_coset_rep(Parabolic(n, jf), u.inverse(), J0);
}

// Stratum label: minimal-length representative of W_{J0} u W_{J_f}.  This is
// the inverse-side reduction of relpos; it always lies in W'.
inline WeylPerm stratum_label(const FlagFq& f, const FlagFq& ref, const Parabolic& J0) {
    return relpos(f, ref, J0).inverse();
}

struct StratumCounts {
    std::map<WeylPerm, long long> eq;  // label -> number of flags with that exact label
    long long total = 0;
};

// Stratifies the classical fiber Spr_P by relative position against the
// reference flag.  Every label must land in W'; anything else signals a
// convention failure and is reported loudly.
inline StratumCounts stratum_counts(const Parabolic& P, const JordanType& lambda, int q,
                                    Budget& budget) {
    JMData jm = jm_data(lambda);
    FlagFq ref = reference_full_flag(lambda, q);
    StratumCounts out;
    for (const FlagFq& f : enumerate_springer(P, P, lambda, q, SpringerKind::parabolic, budget)) {
        WeylPerm label = stratum_label(f, ref, jm.J0);
        if (!in_w_prime(label, jm.J0))
            throw std::runtime_error("stratum_counts: label outside W' (convention failure)");
        ++out.eq[label];
        ++out.total;
    }
    return out;
}

inline long long count_leq(const StratumCounts& s, const WeylPerm& w) {
    long long c = 0;
    for (const auto& [label, k] : s.eq)
        if (bruhat_leq(label, w)) c += k;
    return c;
}

inline long long count_lt(const StratumCounts& s, const WeylPerm& w) {
    long long c = 0;
    for (const auto& [label, k] : s.eq)
        if (!(label == w) && bruhat_leq(label, w)) c += k;
    return c;
}

}  // namespace sprglue
