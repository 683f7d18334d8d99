#include "ascurv/simplex.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace ascurv {

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) {
        throw std::invalid_argument("simplex must have at least one vertex");
    }
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        throw std::invalid_argument("simplex has a repeated vertex");
    }
}

bool Simplex::contains(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::has_face(const Simplex& face) const {
    return std::includes(vertices_.begin(), vertices_.end(), face.vertices_.begin(), face.vertices_.end());
}

bool Simplex::is_disjoint_from(const Simplex& other) const {
    auto a = vertices_.begin();
    auto b = other.vertices_.begin();
    while (a != vertices_.end() && b != other.vertices_.end()) {
        if (*a == *b) {
            return false;
        }
        if (*a < *b) {
            ++a;
        } else {
            ++b;
        }
    }
    return true;
}

Simplex Simplex::without_index(std::size_t i) const {
    std::vector<VertexId> out;
    out.reserve(vertices_.size() - 1);
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
        if (k != i) {
            out.push_back(vertices_[k]);
        }
    }
    return Simplex(std::move(out));
}

std::vector<VertexId> Simplex::complement_of(const Simplex& face) const {
    std::vector<VertexId> out;
    std::set_difference(vertices_.begin(), vertices_.end(), face.vertices_.begin(), face.vertices_.end(),
                        std::back_inserter(out));
    return out;
}

std::vector<Simplex> Simplex::faces() const {
    const std::size_t k = vertices_.size();
    if (k > 24) {
        throw std::length_error("simplex too large to enumerate faces");
    }
    std::vector<Simplex> out;
    out.reserve((std::size_t{1} << k) - 1);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
        std::vector<VertexId> vs;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (std::uint32_t{1} << i)) {
                vs.push_back(vertices_[i]);
            }
        }
        Simplex s;
        s.vertices_ = std::move(vs);  // already sorted and distinct
        out.push_back(std::move(s));
    }
    return out;
}

std::string Simplex::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(vertices_[i]);
    }
    return out + "]";
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(), b.vertices_.begin(),
                                                  b.vertices_.end());
}

Simplex simplex_union(const Simplex& a, const Simplex& b) {
    std::vector<VertexId> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Simplex(std::move(out));
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (VertexId v : s) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace ascurv
