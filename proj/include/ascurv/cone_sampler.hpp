#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace ascurv {

/// Identifies an independent random substream: one per (seed, face, simplex).
/// Each block of samples inside a substream gets its own engine, so results
/// do not depend on how blocks are scheduled across threads.
struct StreamKey {
    std::uint64_t seed = 0;
    std::uint64_t face_index = 0;
    std::uint64_t simplex_index = 0;
};

inline constexpr std::uint64_t kSamplesPerBlock = std::uint64_t{1} << 16;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Engine seed for one block of one substream.
constexpr std::uint64_t block_seed(const StreamKey& key, std::uint64_t block) {
    std::uint64_t h = mix64(key.seed);
    h = mix64(h ^ key.face_index);
    h = mix64(h ^ key.simplex_index);
    return mix64(h ^ block);
}

/// Membership oracle for the simplicial cone spanned by the columns of an
/// upper-triangular c x c generator matrix.
class ConeSampler {
public:
    /// Throws std::domain_error when the generator matrix is singular.
    explicit ConeSampler(const Eigen::MatrixXd& upper_generators);

    int dimension() const { return dim_; }

    /// True iff x = G y has a solution with y >= 0. Reads dimension() entries.
    bool contains(const double* x) const;

    /// Hits among `count` Gaussian directions of block `block` of the substream.
    std::uint64_t count_block(const StreamKey& key, std::uint64_t block, std::uint64_t count) const;

private:
    int dim_;
    Eigen::MatrixXd upper_;
    Eigen::VectorXd inverse_diagonal_;
};

/// Reference implementation: blocks processed in order on the calling thread.
std::uint64_t count_cone_hits_serial(const ConeSampler& cone, const StreamKey& key, std::uint64_t samples);

/// OpenMP implementation over blocks; returns exactly the serial count.
std::uint64_t count_cone_hits_parallel(const ConeSampler& cone, const StreamKey& key, std::uint64_t samples);

}  // namespace ascurv
