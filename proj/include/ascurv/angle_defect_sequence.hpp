#pragma once

#include <mutex>
#include <vector>

#include "ascurv/rational.hpp"

namespace ascurv {

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// Bernoulli number B_n with the convention B_1 = -1/2.
///
/// Computed exactly by the recurrence sum_{i=0}^{n} C(n+1, i) B_i = 0 (n >= 1)
/// and memoized.
Rational bernoulli(long n);

/// Bernoulli polynomial B_n(x) = sum_i C(n, i) B_i x^(n-i).
Rational bernoulli_poly(long n, const Rational& x);

/// a_n = 4 B_{n+2} (2^{n+2} - 1) / (n + 2). Zero for odd n; a_0 = 1.
Rational angle_defect_term(long n);

/// True iff a_n + sum_{i<n} (a_i / 2) C(n+1, i+1) = 1 exactly for 1 <= n <= up_to.
bool verify_ads_recursion(long up_to);

// Exact Bernoulli identities used in the vanishing proof.

/// sum_{i=0}^{n} C(n, i) B_i == B_n. False at n = 1 under B_1 = -1/2.
bool bernoulli_binomial_sum_identity(long n);
/// B_n(1/2) == -(1 - 2^{1-n}) B_n.
bool bernoulli_half_identity(long n);
/// sum_{i=0}^{n} C(n, i) B_i 2^i == B_n (2 - 2^n).
bool bernoulli_doubling_identity(long n);

/// Thread-safe memo of the angle defect sequence. The free function
/// `angle_defect_term` uses a process-wide instance.
class AngleDefectSequence {
public:
    Rational operator()(long n);
    /// Fills a_0..a_n eagerly.
    void warm_up(long n);

private:
    std::mutex mutex_;
    std::vector<Rational> cache_;
};

}  // namespace ascurv
