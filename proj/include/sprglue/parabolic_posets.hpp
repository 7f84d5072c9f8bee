// Gluing posets of standard parabolics: the twisted-arrow poset Tw of pairs
// [P >= Q], twisted triples over proper parabolics, the subposets attached
// to a Weyl element, and the coarsening right adjoint.

#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "nilpotent.hpp"
#include "poset.hpp"
#include "weyl.hpp"

namespace sprglue {

// Pair of standard parabolics with Q contained in P.  Along a morphism the
// first member shrinks and the second grows:
//   [P >= Q] <= [P' >= Q']   iff   J_{P'} subset J_P  and  J_Q subset J_{Q'}.
struct TwArrow {
    Parabolic P, Q;

    TwArrow() = default;
    TwArrow(Parabolic P_, Parabolic Q_) : P(P_), Q(Q_) {
        if (!Q.subset_of(P)) throw std::invalid_argument("TwArrow: need Q <= P");
    }

    std::string name() const { return "[" + P.name() + ">=" + Q.name() + "]"; }

    friend bool operator==(const TwArrow& a, const TwArrow& b) { return a.P == b.P && a.Q == b.Q; }
    friend bool operator<(const TwArrow& a, const TwArrow& b) {
        if (!(a.P == b.P)) return a.P < b.P;
        return a.Q < b.Q;
    }
};

inline bool tw_leq(const TwArrow& a, const TwArrow& b) {
    return b.P.subset_of(a.P) && a.Q.subset_of(b.Q);
}

// Triple of proper parabolics R >= P >= Q.  Morphisms exist exactly for
// R' >= R >= P >= P' >= Q' >= Q.
struct TwTriple {
    Parabolic R, P, Q;

    TwTriple() = default;
    TwTriple(Parabolic R_, Parabolic P_, Parabolic Q_) : R(R_), P(P_), Q(Q_) {
        if (!R.is_proper()) throw std::invalid_argument("TwTriple: parabolics must be proper");
        if (!Q.subset_of(P) || !P.subset_of(R))
            throw std::invalid_argument("TwTriple: need Q <= P <= R");
    }

    std::string name() const {
        return "(" + R.name() + "," + P.name() + "," + Q.name() + ")";
    }
};

inline bool twtr_leq(const TwTriple& a, const TwTriple& b) {
    return a.R.subset_of(b.R) && b.P.subset_of(a.P) && a.Q.subset_of(b.Q);
}

inline std::vector<Parabolic> all_parabolics(int n) {
    std::vector<Parabolic> out;
    for (std::uint32_t m = 0; m <= Parabolic::full_mask(n); ++m) out.emplace_back(n, m);
    return out;
}

inline std::vector<Parabolic> proper_parabolics(int n) {
    std::vector<Parabolic> out;
    for (const Parabolic& p : all_parabolics(n))
        if (p.is_proper()) out.push_back(p);
    return out;
}

struct TwPoset {
    FinitePoset poset;
    std::vector<TwArrow> cells;

    int index_of(const TwArrow& a) const {
        for (std::size_t k = 0; k < cells.size(); ++k)
            if (cells[k] == a) return static_cast<int>(k);
        throw std::invalid_argument("TwPoset: no such cell");
    }
};

// All 3^(n-1) twisted arrows, masks ascending.
inline TwPoset tw_poset(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("tw_poset: need 1 <= n <= 6");
    std::vector<TwArrow> cells;
    for (const Parabolic& P : all_parabolics(n))
        for (std::uint32_t mq = 0; mq <= P.mask; ++mq)
            if ((mq & ~P.mask) == 0) cells.emplace_back(P, Parabolic(n, mq));
    FinitePoset poset = FinitePoset::build<TwArrow>(
        cells, tw_leq, [](const TwArrow& a) { return a.name(); });
    return TwPoset{std::move(poset), std::move(cells)};
}

struct TwTrPoset {
    FinitePoset poset;
    std::vector<TwTriple> cells;
    std::vector<int> phi1;  // cell -> index in tw_poset(n).cells  ((R,P,Q) -> [P >= Q])
    std::vector<int> phi2;  // cell -> index in proper_parabolics(n)  ((R,P,Q) -> R)
};

// Twisted triples over proper parabolics, with the two projection maps.
// Monotonicity of both maps is checked on construction.
inline TwTrPoset twtr_poset(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("twtr_poset: need 1 <= n <= 5");
    std::vector<TwTriple> cells;
    for (const Parabolic& R : proper_parabolics(n))
        for (std::uint32_t mp = 0; mp <= R.mask; ++mp) {
            if ((mp & ~R.mask) != 0) continue;
            Parabolic P(n, mp);
            for (std::uint32_t mq = 0; mq <= mp; ++mq) {
                if ((mq & ~mp) != 0) continue;
                cells.emplace_back(R, P, Parabolic(n, mq));
            }
        }
    FinitePoset poset = FinitePoset::build<TwTriple>(
        cells, twtr_leq, [](const TwTriple& t) { return t.name(); });

    TwPoset tw = tw_poset(n);
    std::vector<Parabolic> props = proper_parabolics(n);
    std::vector<int> phi1, phi2;
    for (const TwTriple& t : cells) {
        phi1.push_back(tw.index_of(TwArrow(t.P, t.Q)));
        int r = -1;
        for (std::size_t k = 0; k < props.size(); ++k)
            if (props[k] == t.R) r = static_cast<int>(k);
        phi2.push_back(r);
    }
    // both maps must be monotone for the comparison of chain sums to make sense
    for (std::size_t a = 0; a < cells.size(); ++a)
        for (std::size_t b = 0; b < cells.size(); ++b) {
            if (!poset.leq(static_cast<int>(a), static_cast<int>(b))) continue;
            if (!tw.poset.leq(phi1[a], phi1[b]))
                throw std::runtime_error("twtr_poset: phi1 not monotone");
            if (!props[phi2[a]].subset_of(props[phi2[b]]))
                throw std::runtime_error("twtr_poset: phi2 not monotone");
        }
    return TwTrPoset{std::move(poset), std::move(cells), std::move(phi1), std::move(phi2)};
}

struct ParPrimePoset {
    FinitePoset poset;
    std::vector<Parabolic> cells;

    int index_of(const Parabolic& p) const {
        for (std::size_t k = 0; k < cells.size(); ++k)
            if (cells[k] == p) return static_cast<int>(k);
        throw std::invalid_argument("ParPrimePoset: no such parabolic");
    }
};

inline ParPrimePoset par_prime_poset(int n) {
    std::vector<Parabolic> cells = proper_parabolics(n);
    FinitePoset poset = FinitePoset::build<Parabolic>(
        cells, [](const Parabolic& a, const Parabolic& b) { return a.subset_of(b); },
        [](const Parabolic& p) { return p.name(); });
    return ParPrimePoset{std::move(poset), std::move(cells)};
}

// Par'_w = {P proper : J_P avoids I+_w}.
inline ParPrimePoset par_w(int n, const Parabolic& J0, const WeylPerm& w) {
    if (!in_w_prime(w, J0)) throw std::invalid_argument("par_w: w is not in W'");
    TriPartition t = tri_partition(w, J0);
    std::vector<Parabolic> cells;
    for (const Parabolic& p : proper_parabolics(n))
        if ((p.mask & t.Iplus) == 0) cells.push_back(p);
    FinitePoset poset = FinitePoset::build<Parabolic>(
        cells, [](const Parabolic& a, const Parabolic& b) { return a.subset_of(b); },
        [](const Parabolic& p) { return p.name(); });
    return ParPrimePoset{std::move(poset), std::move(cells)};
}

// Right adjoint to the inclusion of Par'_w: drops the I+_w part of J_P,
// giving the largest member of Par'_w below P.
inline Parabolic psi(const Parabolic& P, const WeylPerm& w, const Parabolic& J0) {
    if (!P.is_proper()) throw std::invalid_argument("psi: P must be proper");
    if (!in_w_prime(w, J0)) throw std::invalid_argument("psi: w is not in W'");
    TriPartition t = tri_partition(w, J0);
    return Parabolic(P.n, P.mask & ~t.Iplus);
}

// Adjunction law, checked extensionally:
// for all P' in Par'_w and P in Par':  P' <= psi(P)  iff  P' <= P.
inline bool verify_right_adjoint(int n, const Parabolic& J0, const WeylPerm& w) {
    ParPrimePoset sub = par_w(n, J0, w);
    for (const Parabolic& Pp : sub.cells) {
        for (const Parabolic& P : proper_parabolics(n)) {
            bool lhs = Pp.subset_of(psi(P, w, J0));
            bool rhs = Pp.subset_of(P);
            if (lhs != rhs) return false;
        }
    }
    // psi must also land inside Par'_w
    for (const Parabolic& P : proper_parabolics(n)) {
        Parabolic image = psi(P, w, J0);
        bool found = false;
        for (const Parabolic& c : sub.cells)
            if (c == image) found = true;
        if (!found) return false;
    }
    return true;
}

// Subposet of Tw on pairs [P >= Q] with P contained in R.
inline TwPoset tw_r_poset(int n, const Parabolic& R) {
    std::vector<TwArrow> cells;
    for (const TwArrow& a : tw_poset(n).cells)
        if (a.P.subset_of(R)) cells.push_back(a);
    FinitePoset poset = FinitePoset::build<TwArrow>(
        cells, tw_leq, [](const TwArrow& a) { return a.name(); });
    return TwPoset{std::move(poset), std::move(cells)};
}

}  // namespace sprglue
