#include "ascurv/angle_defect_sequence.hpp"

#include <stdexcept>

namespace ascurv {

namespace {

class BernoulliTable {
public:
    Rational get(long n) {
        std::lock_guard lock(mutex_);
        if (values_.empty()) {
            values_.emplace_back(1);
        }
        while (static_cast<long>(values_.size()) <= n) {
            const long m = static_cast<long>(values_.size());
            Rational acc;
            for (long i = 0; i < m; ++i) {
                acc += Rational(binomial(m + 1, i)) * values_[static_cast<std::size_t>(i)];
            }
            values_.push_back(-acc / Rational(m + 1));
        }
        return values_[static_cast<std::size_t>(n)];
    }

private:
    std::mutex mutex_;
    std::vector<Rational> values_;
};

BernoulliTable& bernoulli_table() {
    static BernoulliTable table;
    return table;
}

AngleDefectSequence& global_sequence() {
    static AngleDefectSequence seq;
    return seq;
}

void require_non_negative(long n, const char* what) {
    if (n < 0) {
        throw std::invalid_argument(std::string(what) + ": index must be non-negative");
    }
}

}  // namespace

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Rational bernoulli(long n) {
    require_non_negative(n, "bernoulli");
    return bernoulli_table().get(n);
}

Rational bernoulli_poly(long n, const Rational& x) {
    require_non_negative(n, "bernoulli_poly");
    Rational acc;
    Rational x_power(1);  // x^(n-i), built from i = n downwards
    for (long i = n; i >= 0; --i) {
        acc += Rational(binomial(n, i)) * bernoulli(i) * x_power;
        x_power *= x;
    }
    return acc;
}

Rational AngleDefectSequence::operator()(long n) {
    require_non_negative(n, "angle_defect_term");
    std::lock_guard lock(mutex_);
    while (static_cast<long>(cache_.size()) <= n) {
        const long m = static_cast<long>(cache_.size());
        const Rational factor = power_of_two(m + 2) - Rational(1);
        cache_.push_back(Rational(4) * bernoulli(m + 2) * factor / Rational(m + 2));
    }
    return cache_[static_cast<std::size_t>(n)];
}

void AngleDefectSequence::warm_up(long n) { (void)(*this)(n); }

Rational angle_defect_term(long n) { return global_sequence()(n); }

bool verify_ads_recursion(long up_to) {
    for (long n = 1; n <= up_to; ++n) {
        Rational lhs = angle_defect_term(n);
        for (long i = 0; i < n; ++i) {
            lhs += angle_defect_term(i) / Rational(2) * Rational(binomial(n + 1, i + 1));
        }
        if (lhs != Rational(1)) {
            return false;
        }
    }
    return true;
}

bool bernoulli_binomial_sum_identity(long n) {
    Rational lhs;
    for (long i = 0; i <= n; ++i) {
        lhs += Rational(binomial(n, i)) * bernoulli(i);
    }
    return lhs == bernoulli(n);
}

bool bernoulli_half_identity(long n) {
    const Rational rhs = -(Rational(1) - power_of_two(1 - n)) * bernoulli(n);
    return bernoulli_poly(n, Rational(1, 2)) == rhs;
}

bool bernoulli_doubling_identity(long n) {
    Rational lhs;
    for (long i = 0; i <= n; ++i) {
        lhs += Rational(binomial(n, i)) * bernoulli(i) * power_of_two(i);
    }
    return lhs == bernoulli(n) * (Rational(2) - power_of_two(n));
}

}  // namespace ascurv
