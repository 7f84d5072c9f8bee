// Virtual point counts of diagrams over finite posets, and the count-level
// verifications built on them: glued-fiber contractibility over twisted
// arrows and over proper parabolics, the mixed comparison through twisted
// triples, stratified counts with excision, the Levi recursion, the
// nilpotent-cone gluing identity, and the blow-up warm-up.
//
// The virtual count of a diagram is the alternating sum over strict chains
// x_0 < ... < x_k of (-1)^k value(x_0).  It is computed through the chain
// weights T of the index poset (sum_x T(x) value(x)), which agrees with the
// literal chain enumeration and stays exact.

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flag_fq.hpp"
#include "parabolic_posets.hpp"
#include "parallel.hpp"
#include "polynomial.hpp"
#include "poset.hpp"

namespace sprglue {

struct PosetDiagram {
    FinitePoset index;
    std::vector<CountPolynomial> values;
};

struct PosetDiagramInt {
    FinitePoset index;
    std::vector<long long> values;
};

inline void check_diagram_size(const FinitePoset& p, std::size_t nvalues) {
    if (p.size() > 100) throw std::invalid_argument("virtual_count: poset too large");
    if (static_cast<std::size_t>(p.size()) != nvalues)
        throw std::invalid_argument("virtual_count: every element needs a value");
}

inline long long virtual_count(const PosetDiagramInt& d) {
    check_diagram_size(d.index, d.values.size());
    std::vector<long long> t = chain_weights(d.index);
    long long acc = 0;
    for (int x = 0; x < d.index.size(); ++x) acc += t[x] * d.values[x];
    return acc;
}

inline CountPolynomial virtual_count(const PosetDiagram& d) {
    check_diagram_size(d.index, d.values.size());
    std::vector<long long> t = chain_weights(d.index);
    CountPolynomial acc;
    for (int x = 0; x < d.index.size(); ++x) acc = acc + t[x] * d.values[x];
    return acc;
}

inline constexpr long long kDefaultBudget = 10'000'000;

inline void require_primes(const std::vector<int>& primes, int degree_bound) {
    if (static_cast<int>(primes.size()) < degree_bound + 1)
        throw std::invalid_argument("need at least degree_bound + 1 primes");
    for (int q : primes)
        if (!is_prime_le31(q)) throw std::invalid_argument("primes must be prime and <= 31");
}

// Per-q virtual count of the full twisted-arrow diagram of unipotent fibers.
inline long long glued_unip_count_int(int n, const JordanType& lambda, int q, Budget& budget) {
    TwPoset tw = tw_poset(n);
    std::vector<long long> vals;
    vals.reserve(tw.cells.size());
    for (const TwArrow& cell : tw.cells)
        vals.push_back(count_springer(cell.P, cell.Q, lambda, q, SpringerKind::unipotent, budget));
    return virtual_count(PosetDiagramInt{tw.poset, std::move(vals)});
}

struct GluedCheckResult {
    std::vector<std::string> cell_names;
    std::vector<CountPolynomial> cell_polys;
    CountPolynomial total;

    bool contractible() const { return total.is_one(); }
};

// Twisted-arrow gluing: interpolates each cell count and the diagram's
// virtual count from per-prime enumeration.  A contractible gluing comes out
// as the constant polynomial 1.
inline GluedCheckResult glued_springer_check(int n, const JordanType& lambda,
                                             const std::vector<int>& primes,
                                             long long budget_cap = kDefaultBudget) {
    if (lambda.n() != n) throw std::invalid_argument("glued_springer_check: partition of wrong size");
    int degree_bound = n * (n - 1) / 2;
    require_primes(primes, degree_bound);
    TwPoset tw = tw_poset(n);
    const int ncells = static_cast<int>(tw.cells.size());
    std::vector<std::vector<long long>> counts(primes.size(), std::vector<long long>(ncells));
    parallel_for(static_cast<int>(primes.size()), [&](int pi) {
        Budget budget{budget_cap};
        for (int c = 0; c < ncells; ++c)
            counts[pi][c] = count_springer(tw.cells[c].P, tw.cells[c].Q, lambda, primes[pi],
                                           SpringerKind::unipotent, budget);
    });

    GluedCheckResult res;
    for (const TwArrow& cell : tw.cells) res.cell_names.push_back(cell.name());
    for (int c = 0; c < ncells; ++c) {
        std::vector<std::pair<long long, long long>> samples;
        for (std::size_t pi = 0; pi < primes.size(); ++pi)
            samples.emplace_back(primes[pi], counts[pi][c]);
        res.cell_polys.push_back(interpolate_count_polynomial(samples, degree_bound));
    }
    std::vector<std::pair<long long, long long>> totals;
    for (std::size_t pi = 0; pi < primes.size(); ++pi)
        totals.emplace_back(primes[pi],
                            virtual_count(PosetDiagramInt{tw.poset, counts[pi]}));
    res.total = interpolate_count_polynomial(totals, degree_bound);
    return res;
}

// Gluing over proper parabolics with the flag-preserving condition.  Only
// meaningful away from the zero orbit, where every fiber is the whole flag
// variety and the count is not 1.
inline GluedCheckResult glued_par_check(int n, const JordanType& lambda,
                                        const std::vector<int>& primes,
                                        long long budget_cap = kDefaultBudget) {
    if (lambda.n() != n) throw std::invalid_argument("glued_par_check: partition of wrong size");
    if (lambda.is_zero_orbit())
        throw std::invalid_argument("glued_par_check: requires a nonzero nilpotent");
    int degree_bound = n * (n - 1) / 2;
    require_primes(primes, degree_bound);
    ParPrimePoset par = par_prime_poset(n);
    const int ncells = static_cast<int>(par.cells.size());
    std::vector<std::vector<long long>> counts(primes.size(), std::vector<long long>(ncells));
    parallel_for(static_cast<int>(primes.size()), [&](int pi) {
        Budget budget{budget_cap};
        for (int c = 0; c < ncells; ++c)
            counts[pi][c] = count_springer(par.cells[c], par.cells[c], lambda, primes[pi],
                                           SpringerKind::parabolic, budget);
    });

    GluedCheckResult res;
    for (const Parabolic& p : par.cells) res.cell_names.push_back(p.name());
    for (int c = 0; c < ncells; ++c) {
        std::vector<std::pair<long long, long long>> samples;
        for (std::size_t pi = 0; pi < primes.size(); ++pi)
            samples.emplace_back(primes[pi], counts[pi][c]);
        res.cell_polys.push_back(interpolate_count_polynomial(samples, degree_bound));
    }
    std::vector<std::pair<long long, long long>> totals;
    for (std::size_t pi = 0; pi < primes.size(); ++pi)
        totals.emplace_back(primes[pi], virtual_count(PosetDiagramInt{par.poset, counts[pi]}));
    res.total = interpolate_count_polynomial(totals, degree_bound);
    return res;
}

struct MixedCheckResult {
    CountPolynomial tw_total;
    CountPolynomial twtr_total;

    bool equal() const { return tw_total == twtr_total; }
};

// Compares the twisted-triple gluing (pulled back through [R >= P >= Q] ->
// [P >= Q]) against the twisted-arrow gluing.  Equality reflects the
// comparison isomorphism, which needs a nonzero nilpotent; both totals are
// reported so the zero-orbit discrepancy stays visible.
inline MixedCheckResult mixed_check(int n, const JordanType& lambda, const std::vector<int>& primes,
                                    long long budget_cap = kDefaultBudget) {
    if (lambda.n() != n) throw std::invalid_argument("mixed_check: partition of wrong size");
    int degree_bound = n * (n - 1) / 2;
    require_primes(primes, degree_bound);
    TwPoset tw = tw_poset(n);
    TwTrPoset twtr = twtr_poset(n);
    const int ncells = static_cast<int>(tw.cells.size());
    std::vector<std::vector<long long>> cellcounts(primes.size(), std::vector<long long>(ncells));
    parallel_for(static_cast<int>(primes.size()), [&](int pi) {
        Budget budget{budget_cap};
        for (int c = 0; c < ncells; ++c)
            cellcounts[pi][c] = count_springer(tw.cells[c].P, tw.cells[c].Q, lambda, primes[pi],
                                               SpringerKind::unipotent, budget);
    });
    std::vector<std::pair<long long, long long>> tw_totals, twtr_totals;
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
        tw_totals.emplace_back(primes[pi], virtual_count(PosetDiagramInt{tw.poset, cellcounts[pi]}));
        std::vector<long long> tri_vals;
        tri_vals.reserve(twtr.cells.size());
        for (std::size_t c = 0; c < twtr.cells.size(); ++c)
            tri_vals.push_back(cellcounts[pi][twtr.phi1[c]]);
        twtr_totals.emplace_back(primes[pi],
                                 virtual_count(PosetDiagramInt{twtr.poset, std::move(tri_vals)}));
    }
    MixedCheckResult res;
    res.tw_total = interpolate_count_polynomial(tw_totals, degree_bound);
    res.twtr_total = interpolate_count_polynomial(twtr_totals, degree_bound);
    return res;
}

struct LeqWEntry {
    WeylPerm w;
    CountPolynomial leq_total;  // virtual count of the <= w pieces over Par'
    CountPolynomial lt_total;   // same for the < w pieces
};

struct LeqWReport {
    std::vector<LeqWEntry> entries;  // one per element of W', lex order

    bool all_leq_one() const {
        for (const auto& e : entries)
            if (!e.leq_total.is_one()) return false;
        return true;
    }
};

// Stratified gluing: for every w in W', the virtual count over Par' of the
// closed <= w parts of the classical fibers.  The <= identity is the robust
// one; the per-stratum (< w) data is reported alongside for the induction
// bookkeeping.
inline LeqWReport leq_w_checks(int n, const JordanType& lambda, const std::vector<int>& primes,
                               long long budget_cap = kDefaultBudget) {
    if (lambda.n() != n) throw std::invalid_argument("leq_w_checks: partition of wrong size");
    int degree_bound = n * (n - 1) / 2;
    require_primes(primes, degree_bound);
    JMData jm = jm_data(lambda);
    WPrimeData wp = w_prime(n, jm.J0);
    ParPrimePoset par = par_prime_poset(n);

    // strata[pi][c] for prime pi and proper parabolic c
    std::vector<std::vector<StratumCounts>> strata(primes.size());
    parallel_for(static_cast<int>(primes.size()), [&](int pi) {
        Budget budget{budget_cap};
        for (const Parabolic& P : par.cells)
            strata[pi].push_back(stratum_counts(P, lambda, primes[pi], budget));
    });

    LeqWReport report;
    for (const WeylPerm& w : wp.elements) {
        std::vector<std::pair<long long, long long>> leq_samples, lt_samples;
        for (std::size_t pi = 0; pi < primes.size(); ++pi) {
            std::vector<long long> leq_vals, lt_vals;
            for (std::size_t c = 0; c < par.cells.size(); ++c) {
                leq_vals.push_back(count_leq(strata[pi][c], w));
                lt_vals.push_back(count_lt(strata[pi][c], w));
            }
            leq_samples.emplace_back(primes[pi],
                                     virtual_count(PosetDiagramInt{par.poset, leq_vals}));
            lt_samples.emplace_back(primes[pi],
                                    virtual_count(PosetDiagramInt{par.poset, lt_vals}));
        }
        LeqWEntry e;
        e.w = w;
        e.leq_total = interpolate_count_polynomial(leq_samples, degree_bound);
        e.lt_total = interpolate_count_polynomial(lt_samples, degree_bound);
        report.entries.push_back(std::move(e));
    }
    return report;
}

struct ExcisionLine {
    Parabolic P;
    Parabolic psi_P;
    int q = 0;
    long long delta_P = 0;      // count(<= w) - count(< w) in Spr_P
    long long delta_psi_P = 0;  // same in Spr_{psi(P)}
};

struct ExcisionReport {
    WeylPerm w;
    std::vector<ExcisionLine> lines;

    bool ok() const {
        for (const auto& l : lines)
            if (l.delta_P != l.delta_psi_P) return false;
        return true;
    }
};

// Open-complement count identity for the coarsening map: shrinking P to
// psi(P) changes neither the <= w minus < w difference.  Meaningful for
// w in W' - {1, w0'}.
inline ExcisionReport excision_check(int n, const JordanType& lambda, const WeylPerm& w,
                                     const std::vector<int>& primes,
                                     long long budget_cap = kDefaultBudget) {
    JMData jm = jm_data(lambda);
    WPrimeData wp = w_prime(n, jm.J0);
    if (!in_w_prime(w, jm.J0)) throw std::invalid_argument("excision_check: w not in W'");
    if (w.is_identity() || w == wp.w0p)
        throw std::invalid_argument("excision_check: w must avoid 1 and w0'");

    ExcisionReport report;
    report.w = w;
    std::map<std::pair<std::uint32_t, int>, StratumCounts> cache;
    auto strata_of = [&](const Parabolic& P, int q) -> const StratumCounts& {
        auto key = std::make_pair(P.mask, q);
        auto it = cache.find(key);
        if (it == cache.end()) {
            Budget budget{budget_cap};
            it = cache.emplace(key, stratum_counts(P, lambda, q, budget)).first;
        }
        return it->second;
    };
    for (const Parabolic& P : proper_parabolics(n)) {
        Parabolic tP = psi(P, w, jm.J0);
        for (int q : primes) {
            const StratumCounts& sp = strata_of(P, q);
            const StratumCounts& st = strata_of(tP, q);
            ExcisionLine line;
            line.P = P;
            line.psi_P = tP;
            line.q = q;
            line.delta_P = count_leq(sp, w) - count_lt(sp, w);
            line.delta_psi_P = count_leq(st, w) - count_lt(st, w);
            report.lines.push_back(line);
        }
    }
    return report;
}

namespace detail {

// Coefficients of `target` in the row space of `basis` (rows independent).
inline std::vector<int> solve_in_span(const FqMatrix& basis, const std::vector<int>& target) {
    int q = basis.q(), rows = basis.rows(), n = basis.cols();
    // augmented system: basis^T x = target
    FqMatrix aug(q, n, rows + 1);
    for (int i = 0; i < n; ++i) {
        for (int r = 0; r < rows; ++r) aug.at(i, r) = basis.at(r, i);
        aug.at(i, rows) = static_cast<std::uint8_t>(((target[i] % q) + q) % q);
    }
    aug.rref();
    std::vector<int> x(rows, 0);
    for (int r = 0; r < aug.rows(); ++r) {
        int p = -1;
        for (int c = 0; c < rows + 1; ++c)
            if (aug.at(r, c)) { p = c; break; }
        if (p < 0) continue;
        if (p == rows) throw std::runtime_error("solve_in_span: vector not in span");
        x[p] = aug.at(r, rows);
    }
    return x;
}

// Jordan types of the maps induced on the graded pieces of an invariant flag.
inline std::vector<std::pair<int, JordanType>> levi_block_types(const FqMatrix& A,
                                                                const FlagFq& f) {
    int n = f.n, q = f.q;
    std::vector<std::pair<int, JordanType>> out;
    FqMatrix prev(q, 0, n);
    std::vector<int> alldims = f.dims;
    alldims.push_back(n);
    for (std::size_t j = 0; j < alldims.size(); ++j) {
        const FqMatrix full_step = [&]() {
            if (j < f.steps.size()) return f.steps[j];
            FqMatrix id(q, n, n);
            for (int r = 0; r < n; ++r) id.at(r, r) = 1;
            return id;
        }();
        // representatives of the graded piece: rows of the step outside prev
        std::vector<std::vector<int>> reps;
        FqMatrix span = prev;
        for (int r = 0; r < full_step.rows(); ++r) {
            std::vector<int> v = full_step.row(r);
            if (span.contains_vector(v)) continue;
            reps.push_back(v);
            FqMatrix rowm(q, 1, n);
            for (int c = 0; c < n; ++c) rowm.at(0, c) = static_cast<std::uint8_t>(v[c]);
            span = span.stacked(rowm);
            span.rref();
        }
        int b = static_cast<int>(reps.size());
        // induced matrix: columns are A * rep expressed in (prev + reps)
        FqMatrix basis = prev;
        for (const auto& v : reps) {
            FqMatrix rowm(q, 1, n);
            for (int c = 0; c < n; ++c) rowm.at(0, c) = static_cast<std::uint8_t>(v[c]);
            basis = basis.stacked(rowm);
        }
        FqMatrix induced(q, b, b);
        for (int t = 0; t < b; ++t) {
            std::vector<int> av = A.apply(reps[t]);
            std::vector<int> coeff = solve_in_span(basis, av);
            for (int s = 0; s < b; ++s) induced.at(s, t) = static_cast<std::uint8_t>(coeff[prev.rows() + s]);
        }
        // Jordan type from the rank sequence of powers
        std::vector<int> ranks = {b};
        FqMatrix power = induced;
        while (ranks.back() > 0) {
            ranks.push_back(power.rank());
            power = power.multiply(induced);
        }
        out.emplace_back(b, jordan_type_of_ranks(ranks, b));
        prev = full_step;
    }
    return out;
}

}  // namespace detail

struct LeviFiberLine {
    FlagFq flag;
    long long lhs = 0;  // virtual count of the coarsening fibers over Tw_R
    long long rhs = 0;  // product of the blockwise glued counts
};

struct LeviReport {
    std::vector<LeviFiberLine> lines;

    bool ok() const {
        for (const auto& l : lines)
            if (l.lhs != l.rhs) return false;
        return true;
    }
};

// Fiberwise Levi recursion at a proper parabolic R: over each point of the
// classical fiber Spr_R, the glued count of the unipotent cells below R
// matches the glued count of the induced nilpotents in the Levi blocks.
inline LeviReport levi_fiber_check(int n, const JordanType& lambda, const Parabolic& R, int q,
                                   long long budget_cap = kDefaultBudget) {
    if (!R.is_proper()) throw std::invalid_argument("levi_fiber_check: R must be proper");
    Budget budget{budget_cap};
    FqMatrix A = jordan_matrix_fq(lambda, q);
    TwPoset tw_r = tw_r_poset(n, R);
    LeviReport report;
    for (const FlagFq& f : enumerate_springer(R, R, lambda, q, SpringerKind::parabolic, budget)) {
        std::vector<long long> vals;
        vals.reserve(tw_r.cells.size());
        for (const TwArrow& cell : tw_r.cells)
            vals.push_back(count_springer_over(cell.P, cell.Q, lambda, q, f, budget));
        LeviFiberLine line;
        line.flag = f;
        line.lhs = virtual_count(PosetDiagramInt{tw_r.poset, std::move(vals)});
        line.rhs = 1;
        for (const auto& [b, type] : detail::levi_block_types(A, f))
            line.rhs *= glued_unip_count_int(b, type, q, budget);
        report.lines.push_back(std::move(line));
    }
    return report;
}

struct NilconeResult {
    CountPolynomial total;
    CountPolynomial expected;

    bool ok() const { return total == expected; }
};

// Twisted-arrow gluing of the nilpotent cone, evaluated combinatorially:
// the cell at [P >= Q] carries #(G/Q)(q) * q^{dim u_P} points, and the
// alternating chain sum collapses to q^{n(n-1)}.
inline NilconeResult nilcone_check(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("nilcone_check: need 1 <= n <= 5");
    TwPoset tw = tw_poset(n);
    auto dim_nilradical = [&](const Parabolic& P) {
        std::vector<int> dims = flag_type_of(P, n);
        int sumsq = 0, prev = 0;
        for (int d : dims) {
            sumsq += (d - prev) * (d - prev);
            prev = d;
        }
        sumsq += (n - prev) * (n - prev);
        return (n * n - sumsq) / 2;
    };
    std::vector<CountPolynomial> vals;
    for (const TwArrow& cell : tw.cells)
        vals.push_back(flag_count_poly(n, flag_type_of(cell.Q, n)) *
                       CountPolynomial::q_power(dim_nilradical(cell.P)));
    NilconeResult res;
    res.total = virtual_count(PosetDiagram{tw.poset, std::move(vals)});
    res.expected = CountPolynomial::q_power(n * (n - 1));
    return res;
}

struct BlowupResult {
    CountPolynomial total;
    CountPolynomial expected;

    bool ok() const { return total == expected; }
};

// Gluing a point to the blow-up of affine m-space along the exceptional
// divisor: 1 + #B - #E = q^m with #E the projective space count and
// #B = q * #E.
inline BlowupResult blowup_demo(int m) {
    if (m < 1 || m > 8) throw std::invalid_argument("blowup_demo: need 1 <= m <= 8");
    std::vector<long long> proj(m, 1);  // 1 + q + ... + q^{m-1}
    CountPolynomial e{std::vector<long long>(proj)};
    CountPolynomial b = CountPolynomial::q_power(1) * e;
    BlowupResult res;
    res.total = CountPolynomial::constant(1) + b - e;
    res.expected = CountPolynomial::q_power(m);
    return res;
}

}  // namespace sprglue
