// Copyright 2026 The mdseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Independent reference computations used only by the tests. None of these
// share code paths with the library routines they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <gmp.h>

namespace mdseq::oracle {

inline bool is_prime_trial_division(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

/// Counts every gap value into a map, then takes the smallest most-frequent.
inline std::uint32_t brute_force_mode(const std::vector<std::uint32_t>& gaps, std::size_t prefix) {
    std::map<std::uint32_t, std::size_t> h;
    for (std::size_t i = 0; i < prefix; ++i) h[gaps[i]]++;
    std::uint32_t best = 0;
    std::size_t best_count = 0;
    for (auto [g, c] : h) {
        if (c > best_count || (c == best_count && g < best)) {
            best = g;
            best_count = c;
        }
    }
    return best;
}

/// Star discrepancy by the counting definition: sup over anchored intervals
/// [0, t) and [0, t] of |#points / N - t|, evaluated at every candidate
/// endpoint (each point and 1).
inline double star_discrepancy_by_counting(const std::vector<double>& pts) {
    const double n = static_cast<double>(pts.size());
    std::vector<double> candidates = pts;
    candidates.push_back(1.0);
    double d = 0.0;
    for (double t : candidates) {
        std::size_t open = 0, closed = 0;
        for (double p : pts) {
            open += p < t;
            closed += p <= t;
        }
        d = std::max(d, std::abs(static_cast<double>(open) / n - t));
        d = std::max(d, std::abs(static_cast<double>(closed) / n - t));
    }
    return d;
}

/// Direct Weyl sum in long double, term by term.
inline long double weyl_sum_long_double(const std::vector<double>& s, std::size_t k) {
    const long double two_pi = 6.283185307179586476925286766559L;
    long double re = 0, im = 0;
    for (double v : s) {
        const long double phase = two_pi * static_cast<long double>(k) * static_cast<long double>(v);
        re += std::cos(phase);
        im += std::sin(phase);
    }
    return std::sqrt(re * re + im * im);
}

/// Decimal digits of sqrt(n) (integer part first) via exact integer square
/// root of n * 10^(2 (count - 1)).
inline std::string sqrt_digits(unsigned long n, std::size_t count) {
    mpz_t x, r;
    mpz_init(x);
    mpz_init(r);
    mpz_ui_pow_ui(x, 10, 2 * (count - 1));
    mpz_mul_ui(x, x, n);
    mpz_sqrt(r, x);
    char* str = mpz_get_str(nullptr, 10, r);
    std::string out(str);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(str, out.size() + 1);
    mpz_clear(x);
    mpz_clear(r);
    return out;
}

/// p-quantile of the chi-square law with `df` degrees of freedom, by
/// bisection on the regularized incomplete gamma series.
inline double chi_square_quantile(double df, double p) {
    auto cdf = [df](double x) {
        // P(df/2, x/2) via its power series.
        const double a = df / 2.0, z = x / 2.0;
        double term = 1.0 / a, sum = term;
        for (int k = 1; k < 10000; ++k) {
            term *= z / (a + k);
            sum += term;
            if (term < sum * 1e-17) break;
        }
        return std::exp(-z + a * std::log(z) - std::lgamma(a)) * sum;
    };
    double lo = 0.0, hi = df * 10.0 + 100.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (cdf(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

inline std::vector<double> uniform_points(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> out(n);
    for (double& x : out) x = u(rng);
    return out;
}

}  // namespace mdseq::oracle
