// Integer polynomials in the point-count variable q, exact arithmetic only.
// Interpolation from per-prime samples goes through rational divided
// differences and refuses to return anything with non-integer coefficients.

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sprglue {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Coefficients low to high, normalized (no trailing zeros; zero = {}).
struct CountPolynomial {
    std::vector<long long> coeffs;

    CountPolynomial() = default;
    explicit CountPolynomial(std::vector<long long> c) : coeffs(std::move(c)) { normalize(); }
    static CountPolynomial constant(long long c) { return CountPolynomial({c}); }
    static CountPolynomial q_power(int k) {
        std::vector<long long> c(k + 1, 0);
        c[k] = 1;
        return CountPolynomial(std::move(c));
    }

    void normalize() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    bool is_zero() const { return coeffs.empty(); }
    bool is_one() const { return coeffs.size() == 1 && coeffs[0] == 1; }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    BigInt eval(long long q) const {
        BigInt acc = 0;
        for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * q + coeffs[k];
        return acc;
    }

    std::string to_string() const {
        if (coeffs.empty()) return "0";
        std::string s;
        for (int k = degree(); k >= 0; --k) {
            long long c = coeffs[k];
            if (c == 0) continue;
            if (!s.empty()) s += c > 0 ? "+" : "-";
            else if (c < 0) s += "-";
            long long a = c > 0 ? c : -c;
            if (k == 0) {
                s += std::to_string(a);
            } else {
                if (a != 1) s += std::to_string(a);
                s += "q";
                if (k > 1) s += "^" + std::to_string(k);
            }
        }
        return s;
    }

    friend bool operator==(const CountPolynomial& a, const CountPolynomial& b) {
        return a.coeffs == b.coeffs;
    }
    friend bool operator!=(const CountPolynomial& a, const CountPolynomial& b) { return !(a == b); }

    friend CountPolynomial operator+(const CountPolynomial& a, const CountPolynomial& b) {
        std::vector<long long> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
        for (std::size_t k = 0; k < a.coeffs.size(); ++k) c[k] += a.coeffs[k];
        for (std::size_t k = 0; k < b.coeffs.size(); ++k) c[k] += b.coeffs[k];
        return CountPolynomial(std::move(c));
    }
    friend CountPolynomial operator-(const CountPolynomial& a, const CountPolynomial& b) {
        std::vector<long long> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
        for (std::size_t k = 0; k < a.coeffs.size(); ++k) c[k] += a.coeffs[k];
        for (std::size_t k = 0; k < b.coeffs.size(); ++k) c[k] -= b.coeffs[k];
        return CountPolynomial(std::move(c));
    }
    friend CountPolynomial operator*(const CountPolynomial& a, const CountPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return CountPolynomial();
        std::vector<long long> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
        return CountPolynomial(std::move(c));
    }
    friend CountPolynomial operator*(long long s, const CountPolynomial& a) {
        std::vector<long long> c = a.coeffs;
        for (long long& x : c) x *= s;
        return CountPolynomial(std::move(c));
    }
};

// Gaussian binomial [m choose k]_q via the Pascal recurrence.
inline CountPolynomial gaussian_binomial(int m, int k) {
    if (k < 0 || k > m) return CountPolynomial();
    std::vector<std::vector<CountPolynomial>> t(m + 1, std::vector<CountPolynomial>(k + 1));
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= std::min(i, k); ++j) {
            if (j == 0 || j == i) {
                t[i][j] = CountPolynomial::constant(1);
            } else {
                t[i][j] = t[i - 1][j - 1] + CountPolynomial::q_power(j) * t[i - 1][j];
            }
        }
    }
    return t[m][k];
}

// Number of partial flags in F_q^n with the given proper step dimensions,
// as a polynomial: the q-multinomial of the block sizes.
inline CountPolynomial flag_count_poly(int n, const std::vector<int>& dims) {
    CountPolynomial out = CountPolynomial::constant(1);
    int rem = n, prev = 0;
    for (int d : dims) {
        if (d <= prev || d >= n) throw std::invalid_argument("flag_count_poly: bad dims");
        out = out * gaussian_binomial(rem, d - prev);
        rem -= d - prev;
        prev = d;
    }
    return out;
}

inline long long flag_count_int(int n, const std::vector<int>& dims, int q) {
    BigInt v = flag_count_poly(n, dims).eval(q);
    if (v > BigInt(std::int64_t(4) << 60)) throw std::overflow_error("flag_count_int: overflow");
    return v.convert_to<long long>();
}

// Unique interpolating polynomial through the samples (q_i, y_i), exact
// rational arithmetic.  Errors if the degree exceeds the bound, if any
// coefficient is not an integer, or if a sample is not reproduced.
inline CountPolynomial interpolate_count_polynomial(
    const std::vector<std::pair<long long, long long>>& samples, int degree_bound) {
    const int m = static_cast<int>(samples.size());
    if (m < degree_bound + 1)
        throw std::invalid_argument("interpolate_count_polynomial: need degree_bound + 1 samples");
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (samples[i].first == samples[j].first)
                throw std::invalid_argument("interpolate_count_polynomial: repeated sample point");

    // Newton divided differences over all samples.
    std::vector<BigRational> dd(m);
    for (int i = 0; i < m; ++i) dd[i] = BigRational(samples[i].second);
    std::vector<BigRational> newton;  // newton[k] = f[x_0..x_k]
    newton.push_back(dd[0]);
    for (int level = 1; level < m; ++level) {
        for (int i = 0; i + level < m; ++i) {
            dd[i] = (dd[i + 1] - dd[i]) /
                    BigRational(samples[i + level].first - samples[i].first);
        }
        newton.push_back(dd[0]);
    }

    // Expand to the monomial basis.
    std::vector<BigRational> poly;  // low to high
    std::vector<BigRational> basis = {BigRational(1)};  // prod (x - x_j), j < k
    for (int k = 0; k < m; ++k) {
        if (poly.size() < basis.size()) poly.resize(basis.size(), BigRational(0));
        for (std::size_t t = 0; t < basis.size(); ++t) poly[t] += newton[k] * basis[t];
        // basis *= (x - x_k)
        std::vector<BigRational> next(basis.size() + 1, BigRational(0));
        for (std::size_t t = 0; t < basis.size(); ++t) {
            next[t + 1] += basis[t];
            next[t] -= basis[t] * BigRational(samples[k].first);
        }
        basis = std::move(next);
    }
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
    if (static_cast<int>(poly.size()) - 1 > degree_bound)
        throw std::runtime_error("interpolate_count_polynomial: degree exceeds bound (not a count polynomial?)");

    std::vector<long long> coeffs;
    coeffs.reserve(poly.size());
    for (const BigRational& c : poly) {
        if (denominator(c) != 1)
            throw std::runtime_error("interpolate_count_polynomial: non-integer coefficient");
        BigInt num = numerator(c);
        if (num > BigInt(std::int64_t(4) << 60) || num < -BigInt(std::int64_t(4) << 60))
            throw std::overflow_error("interpolate_count_polynomial: coefficient overflow");
        coeffs.push_back(num.convert_to<long long>());
    }
    CountPolynomial out(std::move(coeffs));
    for (auto [x, y] : samples)
        if (out.eval(x) != y)
            throw std::runtime_error("interpolate_count_polynomial: residual mismatch");
    return out;
}

}  // namespace sprglue
