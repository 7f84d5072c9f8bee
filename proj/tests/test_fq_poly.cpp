#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "sprglue/fq.hpp"
#include "sprglue/polynomial.hpp"

using namespace sprglue;

TEST_CASE("prime field arithmetic") {
    for (int q : {2, 3, 5, 7, 31}) {
        for (int a = 0; a < q; ++a) {
            PrimeFieldElem x(q, a);
            CHECK((x + PrimeFieldElem(q, q - a)).v == 0);
            if (a != 0) {
                CHECK((x * x.inv()).v == 1);
                CHECK((x / x).v == 1);
            }
        }
    }
    CHECK(PrimeFieldElem(7, -1).v == 6);
    CHECK_THROWS_AS(PrimeFieldElem(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeFieldElem(37, 1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeFieldElem(5, 0).inv(), std::domain_error);
}

TEST_CASE("rref canonicalizes") {
    FqMatrix m = FqMatrix::from_rows(3, {{2, 1, 0}, {0, 2, 1}});
    m.rref();
    FqMatrix expected = FqMatrix::from_rows(3, {{1, 0, 2}, {0, 1, 2}});
    CHECK(m == expected);
    // dependent rows are dropped
    FqMatrix d = FqMatrix::from_rows(5, {{1, 2, 3}, {2, 4, 6}});
    CHECK(d.rref() == 1);
    CHECK(d.rows() == 1);
}

TEST_CASE("subspace enumeration matches Gaussian binomials") {
    for (int q : {2, 3, 5}) {
        for (int n = 1; n <= 4; ++n) {
            for (int d = 0; d <= n; ++d) {
                Budget budget;
                auto subs = all_subspaces(q, n, d, budget);
                long long expected = gaussian_binomial(n, d).eval(q).convert_to<long long>();
                CHECK(static_cast<long long>(subs.size()) == expected);
                // canonical: all distinct, all in rref of the right shape
                std::set<FqMatrix> dedup(subs.begin(), subs.end());
                CHECK(dedup.size() == subs.size());
            }
        }
    }
}

TEST_CASE("extension enumeration counts the quotient") {
    int q = 3, n = 4;
    FqMatrix u = FqMatrix::from_rows(q, {{1, 0, 2, 1}});
    for (int d = 1; d <= 4; ++d) {
        Budget budget;
        std::vector<FqMatrix> exts;
        for_each_extension(u, d, budget, [&](const FqMatrix& w) {
            CHECK(w.contains_subspace(u));
            exts.push_back(w);
        });
        long long expected = gaussian_binomial(n - 1, d - 1).eval(q).convert_to<long long>();
        CHECK(static_cast<long long>(exts.size()) == expected);
    }
}

TEST_CASE("budget is enforced") {
    Budget tiny{10};
    CHECK_THROWS_AS(all_subspaces(5, 4, 2, tiny), std::runtime_error);
}

TEST_CASE("polynomial arithmetic and printing") {
    CountPolynomial p({1, 2});  // 2q + 1
    CHECK(p.to_string() == "2q+1");
    CHECK((p * p).to_string() == "4q^2+4q+1");
    CHECK((p - p).is_zero());
    CHECK(CountPolynomial::q_power(3).eval(2) == 8);
    CHECK(CountPolynomial({-1, 0, 1}).to_string() == "q^2-1");
}

TEST_CASE("gaussian binomial values") {
    CHECK(gaussian_binomial(2, 1).to_string() == "q+1");
    CHECK(gaussian_binomial(4, 2).to_string() == "q^4+q^3+2q^2+q+1");
    CHECK(flag_count_poly(3, {1, 2}).to_string() == "q^3+2q^2+2q+1");
    CHECK(flag_count_int(3, {1, 2}, 2) == 21);
}

TEST_CASE("interpolation examples") {
    CHECK(interpolate_count_polynomial({{2, 5}, {3, 7}, {5, 11}}, 2) == CountPolynomial({1, 2}));
    CHECK(interpolate_count_polynomial({{2, 1}, {3, 1}, {5, 1}}, 2) == CountPolynomial::constant(1));
    CHECK(interpolate_count_polynomial({{2, 3}, {3, 4}, {5, 6}}, 2) == CountPolynomial({1, 1}));
    CHECK(interpolate_count_polynomial({{2, 5}, {3, 7}, {5, 11}, {7, 15}}, 3) ==
          CountPolynomial({1, 2}));
}

TEST_CASE("interpolation is independent of the prime set") {
    // leave-one-out on q^2 + q + 1
    std::vector<std::pair<long long, long long>> samples;
    for (long long q : {2, 3, 5, 7, 11})
        samples.push_back({q, q * q + q + 1});
    CountPolynomial full = interpolate_count_polynomial(samples, 2);
    for (std::size_t skip = 0; skip < samples.size(); ++skip) {
        std::vector<std::pair<long long, long long>> some;
        for (std::size_t t = 0; t < samples.size(); ++t)
            if (t != skip) some.push_back(samples[t]);
        CHECK(interpolate_count_polynomial(some, 2) == full);
    }
}

TEST_CASE("interpolation failure modes") {
    // not enough samples
    CHECK_THROWS_AS(interpolate_count_polynomial({{2, 1}, {3, 2}}, 3), std::invalid_argument);
    // repeated point
    CHECK_THROWS_AS(interpolate_count_polynomial({{2, 1}, {2, 1}, {3, 2}}, 2),
                    std::invalid_argument);
    // non-integer coefficients
    CHECK_THROWS_AS(interpolate_count_polynomial({{2, 1}, {3, 2}, {5, 3}}, 2),
                    std::runtime_error);
    // degree exceeds the bound: samples of q^2 with bound 1
    CHECK_THROWS_AS(interpolate_count_polynomial({{2, 4}, {3, 9}, {5, 25}}, 1),
                    std::runtime_error);
}
