#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "sprglue/flag_fq.hpp"
#include "sprglue/nilpotent.hpp"

using namespace sprglue;

TEST_CASE("jm_data examples") {
    // zero orbit: all weights vanish, J0 is everything
    JMData z = jm_data(JordanType({1, 1, 1}));
    CHECK(z.h_weights == std::vector<int>{0, 0, 0});
    CHECK(z.J0 == Parabolic::group(3));
    CHECK(z.ref_flag_dims.empty());

    // regular orbit: distinct weights, J0 empty, full reference flag
    JMData r = jm_data(JordanType({4}));
    CHECK(r.h_weights == std::vector<int>{3, 1, -1, -3});
    CHECK(r.J0 == Parabolic::borel(4));
    CHECK(r.ref_flag_dims == std::vector<int>{1, 2, 3});

    JMData d = jm_data(JordanType({2, 2}));
    CHECK(d.h_weights == std::vector<int>{1, 1, -1, -1});
    CHECK(d.J0 == Parabolic::from_indices(4, {1, 3}));
    CHECK(d.ref_flag_dims == std::vector<int>{2});
}

TEST_CASE("weights sum to zero and descend") {
    for (int n = 1; n <= 6; ++n) {
        for (const JordanType& lambda : all_partitions(n)) {
            JMData d = jm_data(lambda);
            CHECK(std::accumulate(d.h_weights.begin(), d.h_weights.end(), 0) == 0);
            CHECK(std::is_sorted(d.h_weights.rbegin(), d.h_weights.rend()));
        }
    }
}

TEST_CASE("w_prime extremes") {
    WPrimeData all = w_prime(3, Parabolic::borel(3));
    CHECK(all.elements.size() == 6);
    CHECK(all.w0p == longest_element(3));

    WPrimeData one = w_prime(3, Parabolic::group(3));
    REQUIRE(one.elements.size() == 1);
    CHECK(one.elements[0].is_identity());
    CHECK(one.w0p.is_identity());
}

TEST_CASE("w_prime size is the coset index") {
    for (int n = 2; n <= 5; ++n) {
        std::size_t order = 1;
        for (int k = 2; k <= n; ++k) order *= k;
        for (const JordanType& lambda : all_partitions(n)) {
            JMData d = jm_data(lambda);
            WPrimeData wp = w_prime(n, d.J0);
            // |W_{J0}| by counting distinct left cosets directly
            std::set<std::vector<int>> coset_min;
            for (const WeylPerm& w : enumerate_weyl(n))
                coset_min.insert(min_double_coset_rep(d.J0, w, Parabolic::borel(n)).img);
            CHECK(wp.elements.size() == coset_min.size());
            CHECK(wp.elements.size() * (order / coset_min.size()) == order);
        }
    }
}

TEST_CASE("w0p is also the Bruhat maximum") {
    for (int n = 2; n <= 5; ++n)
        for (const JordanType& lambda : all_partitions(n)) {
            WPrimeData wp = w_prime(n, jm_data(lambda).J0);
            for (const WeylPerm& w : wp.elements) CHECK(bruhat_leq(w, wp.w0p));
        }
}

TEST_CASE("tri_partition") {
    // identity with J0 = I puts everything in I0
    TriPartition t = tri_partition(weyl_identity(3), Parabolic::group(3));
    CHECK(t.I0 == Parabolic::full_mask(3));
    CHECK(t.Iplus == 0);
    CHECK(t.Iminus == 0);

    // s1 with J0 empty: 1 goes negative, 2 positive
    TriPartition s = tri_partition(simple_reflection(3, 1), Parabolic::borel(3));
    CHECK(s.I0 == 0);
    CHECK(s.in_minus(1));
    CHECK(s.in_plus(2));

    // the three parts always partition I
    for (int n = 2; n <= 4; ++n)
        for (const JordanType& lambda : all_partitions(n))
            for (const WeylPerm& w : enumerate_weyl(n)) {
                TriPartition p = tri_partition(w, jm_data(lambda).J0);
                CHECK((p.I0 | p.Iplus | p.Iminus) == Parabolic::full_mask(n));
                CHECK((p.I0 & p.Iplus) == 0);
                CHECK((p.I0 & p.Iminus) == 0);
                CHECK((p.Iplus & p.Iminus) == 0);
            }
}

TEST_CASE("jordan_matrix basics") {
    // zero orbit gives the zero matrix
    auto z = jordan_matrix(JordanType({1, 1, 1}));
    for (const auto& row : z)
        for (int x : row) CHECK(x == 0);

    // (2,1): rank one and square zero
    FqMatrix a = jordan_matrix_fq(JordanType({2, 1}), 5);
    CHECK(a.rank() == 1);
    CHECK(a.multiply(a).is_zero());
    // reference flag of the regular-ish type is full here (J0 empty)
    CHECK(reference_flag(JordanType({2, 1}), 5).dims == std::vector<int>{1, 2});
}

TEST_CASE("jordan matrix preserves the reference flag with strict drop") {
    for (int n = 2; n <= 5; ++n) {
        for (const JordanType& lambda : all_partitions(n)) {
            int q = 3;
            FqMatrix a = jordan_matrix_fq(lambda, q);
            FlagFq ref = reference_flag(lambda, q);
            // the weight filtration is the unipotent fiber condition at P0:
            // each step maps into the previous one, the whole space into the top
            FqMatrix prev(q, 0, n);
            for (const FqMatrix& step : ref.steps) {
                for (int r = 0; r < step.rows(); ++r)
                    CHECK(prev.contains_vector(a.apply(step.row(r))));
                prev = step;
            }
            for (int j = 0; j < n; ++j) {
                std::vector<int> e(n, 0);
                e[j] = 1;
                if (!ref.steps.empty())
                    CHECK(ref.steps.back().contains_vector(a.apply(e)));
                else
                    CHECK(a.is_zero());  // J0 = I means A = 0
            }
        }
    }
}

TEST_CASE("jordan type recovered from rank sequence") {
    for (int n = 1; n <= 5; ++n) {
        for (const JordanType& lambda : all_partitions(n)) {
            FqMatrix a = jordan_matrix_fq(lambda, 7);
            std::vector<int> ranks = {n};
            FqMatrix power = a;
            while (ranks.back() > 0) {
                ranks.push_back(power.rank());
                power = power.multiply(a);
            }
            CHECK(jordan_type_of_ranks(ranks, n) == lambda);
        }
    }
}

TEST_CASE("JordanType validation") {
    CHECK_THROWS_AS(JordanType({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(JordanType({0}), std::invalid_argument);
    CHECK_THROWS_AS(JordanType(std::vector<int>{}), std::invalid_argument);
}
