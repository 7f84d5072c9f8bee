#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sprglue/weyl.hpp"

using namespace sprglue;

TEST_CASE("enumerate_weyl sizes and order") {
    CHECK(enumerate_weyl(1).size() == 1);
    CHECK(enumerate_weyl(3).size() == 6);
    CHECK(enumerate_weyl(4).size() == 24);
    auto all = enumerate_weyl(3);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(all.front().is_identity());
    CHECK_THROWS_AS(enumerate_weyl(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_weyl(7), std::invalid_argument);
}

TEST_CASE("length") {
    CHECK(length(weyl_identity(4)) == 0);
    CHECK(length(longest_element(3)) == 3);
    CHECK(length(simple_reflection(3, 1)) == 1);
}

TEST_CASE("act_on_simple") {
    WeylPerm id = weyl_identity(3);
    for (int i = 1; i <= 2; ++i) {
        Root r = act_on_simple(id, i);
        CHECK(r.i == i);
        CHECK(r.j == i + 1);
        CHECK(r.positive());
    }
    // s1 sends alpha_1 to its negative
    Root neg = act_on_simple(simple_reflection(2, 1), 1);
    CHECK(neg.i == 2);
    CHECK(neg.j == 1);
    CHECK_FALSE(neg.positive());
    // s1 in rank 2 sends alpha_2 to e_1 - e_3
    Root r = act_on_simple(simple_reflection(3, 1), 2);
    CHECK(r.i == 1);
    CHECK(r.j == 3);
    CHECK(r.positive());
}

TEST_CASE("act_on_simple sign matches the image comparison") {
    for (int n = 2; n <= 4; ++n)
        for (const WeylPerm& w : enumerate_weyl(n))
            for (int i = 1; i <= n - 1; ++i)
                CHECK(act_on_simple(w, i).positive() == (w(i) < w(i + 1)));
}

TEST_CASE("in_levi_span") {
    Parabolic empty = Parabolic::borel(4);
    Parabolic full = Parabolic::group(4);
    Parabolic j13 = Parabolic::from_indices(4, {1, 3});
    CHECK_FALSE(in_levi_span(Root{1, 2}, empty));
    CHECK(in_levi_span(Root{1, 4}, full));
    CHECK(in_levi_span(Root{1, 2}, j13));
    CHECK(in_levi_span(Root{3, 4}, j13));
    CHECK_FALSE(in_levi_span(Root{1, 3}, j13));
    CHECK_FALSE(in_levi_span(Root{2, 3}, j13));
}

TEST_CASE("bruhat_leq basics") {
    auto s1 = simple_reflection(3, 1);
    auto s2 = simple_reflection(3, 2);
    auto s1s2 = s1 * s2;
    auto s2s1 = s2 * s1;
    for (const WeylPerm& w : enumerate_weyl(3)) {
        CHECK(bruhat_leq(weyl_identity(3), w));
        CHECK(bruhat_leq(w, longest_element(3)));
    }
    CHECK(bruhat_leq(s1, s1s2));
    CHECK_FALSE(bruhat_leq(s2s1, s1s2));
}

TEST_CASE("bruhat_leq agrees with the subword oracle") {
    for (int n = 2; n <= 4; ++n) {
        auto all = enumerate_weyl(n);
        for (const WeylPerm& w : all) {
            auto interval = oracle::bruhat_lower_interval(w);
            for (const WeylPerm& u : all)
                CHECK(bruhat_leq(u, w) == (interval.count(u) > 0));
        }
    }
}

TEST_CASE("length complements against the longest element") {
    for (int n = 2; n <= 4; ++n) {
        WeylPerm w0 = longest_element(n);
        for (const WeylPerm& w : enumerate_weyl(n))
            CHECK(length(w) + length(w * w0) == length(w0));
    }
}

TEST_CASE("min_double_coset_rep examples") {
    auto s1 = simple_reflection(3, 1);
    auto s2 = simple_reflection(3, 2);
    Parabolic none = Parabolic::borel(3);
    // trivial subgroups leave w untouched
    for (const WeylPerm& w : enumerate_weyl(3))
        CHECK(min_double_coset_rep(none, w, none) == w);
    // w inside W_{J_left} reduces to the identity
    Parabolic j1 = Parabolic::from_indices(3, {1});
    CHECK(min_double_coset_rep(j1, s1, none).is_identity());
    // stripping the left descent of s1 s2 at 1 leaves s2
    CHECK(min_double_coset_rep(j1, s1 * s2, none) == s2);
}

TEST_CASE("min_double_coset_rep properties against exhaustive search") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<Parabolic> subsets;
        for (std::uint32_t m = 0; m <= Parabolic::full_mask(n); ++m) subsets.emplace_back(n, m);
        auto all = enumerate_weyl(n);
        for (const Parabolic& L : subsets) {
            for (const Parabolic& R : subsets) {
                for (std::size_t t = 0; t < all.size(); t += (n == 4 ? 5 : 1)) {
                    const WeylPerm& w = all[t];
                    WeylPerm rep = min_double_coset_rep(L, w, R);
                    for (int i : L.indices()) CHECK_FALSE(has_left_descent(rep, i));
                    for (int j : R.indices()) CHECK_FALSE(has_right_descent(rep, j));
                    auto coset = oracle::double_coset(L, w, R);
                    CHECK(coset.count(rep) == 1);
                    CHECK(rep == oracle::min_of_coset(coset));
                }
            }
        }
    }
}

TEST_CASE("composition convention") {
    // (u * w)(k) = u(w(k))
    auto s1 = simple_reflection(3, 1);
    auto s2 = simple_reflection(3, 2);
    WeylPerm p = s1 * s2;
    CHECK(p(1) == 2);
    CHECK(p(2) == 3);
    CHECK(p(3) == 1);
    CHECK((p * p.inverse()).is_identity());
}

TEST_CASE("WeylPerm validation") {
    CHECK_THROWS_AS(WeylPerm({1, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(WeylPerm({0, 1}), std::invalid_argument);
}
