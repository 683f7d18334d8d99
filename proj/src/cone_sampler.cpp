#include "ascurv/cone_sampler.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <omp.h>

namespace ascurv {

ConeSampler::ConeSampler(const Eigen::MatrixXd& upper_generators)
    : dim_(static_cast<int>(upper_generators.rows())), upper_(upper_generators), inverse_diagonal_(dim_) {
    if (upper_generators.rows() != upper_generators.cols() || dim_ < 1) {
        throw std::invalid_argument("cone generator matrix must be square and non-empty");
    }
    const double scale = std::max(1.0, upper_.cwiseAbs().maxCoeff());
    for (int i = 0; i < dim_; ++i) {
        if (std::abs(upper_(i, i)) <= 1e-12 * scale) {
            throw std::domain_error("singular cone generator matrix (degenerate simplex)");
        }
        inverse_diagonal_(i) = 1.0 / upper_(i, i);
    }
}

bool ConeSampler::contains(const double* x) const {
    // Back substitution; stop at the first negative coefficient.
    std::array<double, 32> y{};
    std::vector<double> spill;
    double* coeffs = y.data();
    if (dim_ > static_cast<int>(y.size())) {
        spill.resize(static_cast<std::size_t>(dim_));
        coeffs = spill.data();
    }
    for (int i = dim_ - 1; i >= 0; --i) {
        double acc = x[i];
        for (int j = i + 1; j < dim_; ++j) {
            acc -= upper_(i, j) * coeffs[j];
        }
        coeffs[i] = acc * inverse_diagonal_(i);
        if (coeffs[i] < 0.0) {
            return false;
        }
    }
    return true;
}

std::uint64_t ConeSampler::count_block(const StreamKey& key, std::uint64_t block, std::uint64_t count) const {
    std::mt19937_64 engine(block_seed(key, block));
    std::normal_distribution<double> normal;
    std::vector<double> x(static_cast<std::size_t>(dim_));
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < count; ++s) {
        for (double& xi : x) {
            xi = normal(engine);
        }
        hits += contains(x.data()) ? 1 : 0;
    }
    return hits;
}

namespace {

std::uint64_t block_count(std::uint64_t samples) { return (samples + kSamplesPerBlock - 1) / kSamplesPerBlock; }

std::uint64_t block_size(std::uint64_t samples, std::uint64_t block) {
    const std::uint64_t start = block * kSamplesPerBlock;
    return std::min(kSamplesPerBlock, samples - start);
}

}  // namespace

std::uint64_t count_cone_hits_serial(const ConeSampler& cone, const StreamKey& key, std::uint64_t samples) {
    std::uint64_t hits = 0;
    for (std::uint64_t b = 0; b < block_count(samples); ++b) {
        hits += cone.count_block(key, b, block_size(samples, b));
    }
    return hits;
}

std::uint64_t count_cone_hits_parallel(const ConeSampler& cone, const StreamKey& key, std::uint64_t samples) {
    const auto blocks = static_cast<std::int64_t>(block_count(samples));
    std::uint64_t hits = 0;
#pragma omp parallel for reduction(+ : hits) schedule(dynamic)
    for (std::int64_t b = 0; b < blocks; ++b) {
        const auto ub = static_cast<std::uint64_t>(b);
        hits += cone.count_block(key, ub, block_size(samples, ub));
    }
    return hits;
}

}  // namespace ascurv
