#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ranges>
#include <span>
#include <unordered_map>
#include <vector>

#include "ascurv/simplex.hpp"

namespace ascurv {

/// Index of a simplex inside one complex. Simplices are numbered by
/// dimension first, then lexicographically, so ids of one dimension are
/// contiguous.
using SimplexId = std::size_t;

struct FVector {
    std::vector<long> counts;  // counts[i] = number of i-simplices

    long operator[](std::size_t i) const { return i < counts.size() ? counts[i] : 0; }
    long euler_characteristic() const;
    friend bool operator==(const FVector&, const FVector&) = default;
};

/// Finite abstract simplicial complex, closed under faces and immutable.
///
/// The empty complex has dimension -1 and Euler characteristic 0.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Closes the input under faces; non-maximal inputs are absorbed. An empty
    /// list yields the empty complex.
    static SimplicialComplex from_maximal(std::vector<Simplex> simplices);

    int dimension() const { return static_cast<int>(offsets_.size()) - 2; }
    bool empty() const { return simplices_.empty(); }
    std::size_t size() const { return simplices_.size(); }

    const Simplex& simplex(SimplexId id) const { return simplices_[id]; }
    int dim_of(SimplexId id) const { return simplices_[id].dim(); }
    std::optional<SimplexId> find(const Simplex& s) const;
    /// Throws std::out_of_range when `s` is not in the complex.
    SimplexId id_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_.contains(s); }

    /// Ids of all simplices of dimension d (empty range when out of bounds).
    auto ids_of_dim(int d) const {
        if (d < 0 || d > dimension()) {
            return std::views::iota(SimplexId{0}, SimplexId{0});
        }
        return std::views::iota(offsets_[static_cast<std::size_t>(d)], offsets_[static_cast<std::size_t>(d) + 1]);
    }
    std::size_t count_of_dim(int d) const { return ids_of_dim(d).size(); }
    const std::vector<Simplex>& simplices() const { return simplices_; }
    const std::vector<Simplex>& maximal_simplices() const { return maximal_; }
    std::vector<VertexId> vertices() const;

    /// Simplices of dimension dim_of(id) + 1 that have `id` as a face.
    std::span<const SimplexId> immediate_cofaces(SimplexId id) const { return cofaces_[id]; }
    /// Simplices of the top dimension n that have `id` as a face.
    std::span<const SimplexId> top_cofaces(SimplexId id) const { return top_cofaces_[id]; }
    /// Every simplex having `id` as a face, including itself, sorted by id.
    std::vector<SimplexId> star_ids(SimplexId id) const;

    FVector f_vector() const;
    long euler_characteristic() const { return f_vector().euler_characteristic(); }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.simplices_ == b.simplices_;
    }

private:
    std::vector<Simplex> simplices_;
    std::vector<SimplexId> offsets_;  // offsets_[d]..offsets_[d+1] are the d-simplices
    std::unordered_map<Simplex, SimplexId, SimplexHash> index_;
    std::vector<Simplex> maximal_;
    std::vector<std::vector<SimplexId>> cofaces_;
    std::vector<std::vector<SimplexId>> top_cofaces_;
};

/// link(eta, K) = { w : w and eta disjoint, w u eta in K }. Throws if eta is not in K.
SimplicialComplex link(const Simplex& eta, const SimplicialComplex& complex);

/// Every simplex of K having eta as a face, including eta. Throws if eta is not in K.
std::vector<Simplex> star(const Simplex& eta, const SimplicialComplex& complex);

struct JoinResult {
    SimplicialComplex complex;
    /// Maps each vertex id of the right operand to its id in the join.
    std::map<VertexId, VertexId> right_renumbering;
};

/// Join K * L. L's vertices are shifted past max(K) when the vertex sets collide.
JoinResult join(const SimplicialComplex& left, const SimplicialComplex& right);
/// Cone with one new vertex max(K) + 1.
SimplicialComplex cone(const SimplicialComplex& complex);
/// Suspension with two new vertices max(K) + 1 and max(K) + 2.
SimplicialComplex suspension(const SimplicialComplex& complex);

/// Number of n-simplices having eta as a face; eta must have dimension n - 1.
std::size_t coface_count(const Simplex& eta, const SimplicialComplex& complex);

/// Every (n-1)-simplex is a face of exactly two n-simplices.
bool is_two_pseudomanifold(const SimplicialComplex& complex);

/// For every p-simplex tau: 2 f_{n-p-2}(link tau) == (n-p) f_{n-p-1}(link tau).
/// Requires a two-pseudomanifold and 0 <= p <= n-2.
bool link_fvector_identity_check(const SimplicialComplex& complex, int p);

}  // namespace ascurv
