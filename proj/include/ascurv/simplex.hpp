#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ascurv {

using VertexId = std::uint32_t;

/// A non-empty simplex stored as a strictly increasing list of vertex ids.
class Simplex {
public:
    Simplex() = default;
    /// Sorts the ids. Throws std::invalid_argument on an empty list or a repeated vertex.
    explicit Simplex(std::vector<VertexId> vertices);
    Simplex(std::initializer_list<VertexId> vertices) : Simplex(std::vector<VertexId>(vertices)) {}

    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const { return vertices_.size(); }
    std::span<const VertexId> vertices() const { return vertices_; }
    VertexId operator[](std::size_t i) const { return vertices_[i]; }
    auto begin() const { return vertices_.begin(); }
    auto end() const { return vertices_.end(); }

    bool contains(VertexId v) const;
    /// True iff `face` is a (not necessarily proper) face of this simplex.
    bool has_face(const Simplex& face) const;
    bool is_disjoint_from(const Simplex& other) const;

    /// The facet opposite the i-th vertex. Requires dim() >= 1.
    Simplex without_index(std::size_t i) const;
    /// Vertices of this simplex not in `face`, sorted.
    std::vector<VertexId> complement_of(const Simplex& face) const;
    /// All non-empty faces, including this simplex.
    std::vector<Simplex> faces() const;

    /// "[0,1,2]"
    std::string to_string() const;

    /// Orders by dimension first, then lexicographically.
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);
    friend bool operator==(const Simplex& a, const Simplex& b) = default;

private:
    std::vector<VertexId> vertices_;
};

/// Union of two simplices' vertex sets.
Simplex simplex_union(const Simplex& a, const Simplex& b);

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace ascurv
