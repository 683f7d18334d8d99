#include "ascurv/simplicial_complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ascurv {

long FVector::euler_characteristic() const {
    long chi = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        chi += (i % 2 == 0) ? counts[i] : -counts[i];
    }
    return chi;
}

SimplicialComplex SimplicialComplex::from_maximal(std::vector<Simplex> simplices) {
    SimplicialComplex out;
    std::unordered_set<Simplex, SimplexHash> closed;
    for (const Simplex& s : simplices) {
        if (s.size() == 0) {
            throw std::invalid_argument("empty simplex in complex input");
        }
        if (closed.contains(s)) {
            continue;
        }
        for (Simplex& f : s.faces()) {
            closed.insert(std::move(f));
        }
    }
    out.simplices_.assign(closed.begin(), closed.end());
    std::sort(out.simplices_.begin(), out.simplices_.end());

    const int n = out.simplices_.empty() ? -1 : out.simplices_.back().dim();
    out.offsets_.assign(static_cast<std::size_t>(n + 2), 0);
    for (SimplexId id = 0; id < out.simplices_.size(); ++id) {
        out.index_.emplace(out.simplices_[id], id);
        out.offsets_[static_cast<std::size_t>(out.simplices_[id].dim()) + 1] = id + 1;
    }
    if (out.simplices_.empty()) {
        out.offsets_.clear();
        out.offsets_.push_back(0);  // dimension() == -1
        return out;
    }

    out.cofaces_.resize(out.simplices_.size());
    out.top_cofaces_.resize(out.simplices_.size());
    for (SimplexId id = 0; id < out.simplices_.size(); ++id) {
        const Simplex& s = out.simplices_[id];
        if (s.dim() >= 1) {
            for (std::size_t i = 0; i < s.size(); ++i) {
                out.cofaces_[out.index_.at(s.without_index(i))].push_back(id);
            }
        }
        if (s.dim() == n) {
            for (const Simplex& f : s.faces()) {
                out.top_cofaces_[out.index_.at(f)].push_back(id);
            }
        }
    }
    for (SimplexId id = 0; id < out.simplices_.size(); ++id) {
        std::sort(out.cofaces_[id].begin(), out.cofaces_[id].end());
        std::sort(out.top_cofaces_[id].begin(), out.top_cofaces_[id].end());
        if (out.cofaces_[id].empty()) {
            out.maximal_.push_back(out.simplices_[id]);
        }
    }
    return out;
}

std::optional<SimplexId> SimplicialComplex::find(const Simplex& s) const {
    if (auto it = index_.find(s); it != index_.end()) {
        return it->second;
    }
    return std::nullopt;
}

SimplexId SimplicialComplex::id_of(const Simplex& s) const {
    if (auto id = find(s)) {
        return *id;
    }
    throw std::out_of_range("simplex " + s.to_string() + " is not in the complex");
}

std::vector<VertexId> SimplicialComplex::vertices() const {
    std::vector<VertexId> out;
    for (SimplexId id : ids_of_dim(0)) {
        out.push_back(simplices_[id][0]);
    }
    return out;
}

std::vector<SimplexId> SimplicialComplex::star_ids(SimplexId id) const {
    std::vector<SimplexId> out{id};
    std::vector<SimplexId> frontier{id};
    std::unordered_set<SimplexId> seen{id};
    while (!frontier.empty()) {
        std::vector<SimplexId> next;
        for (SimplexId s : frontier) {
            for (SimplexId c : cofaces_[s]) {
                if (seen.insert(c).second) {
                    next.push_back(c);
                    out.push_back(c);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

FVector SimplicialComplex::f_vector() const {
    FVector f;
    for (int d = 0; d <= dimension(); ++d) {
        f.counts.push_back(static_cast<long>(count_of_dim(d)));
    }
    return f;
}

SimplicialComplex link(const Simplex& eta, const SimplicialComplex& complex) {
    const SimplexId id = complex.id_of(eta);
    std::vector<Simplex> pieces;
    for (SimplexId s : complex.star_ids(id)) {
        if (s == id) {
            continue;
        }
        pieces.emplace_back(complex.simplex(s).complement_of(eta));
    }
    return SimplicialComplex::from_maximal(std::move(pieces));
}

std::vector<Simplex> star(const Simplex& eta, const SimplicialComplex& complex) {
    std::vector<Simplex> out;
    for (SimplexId s : complex.star_ids(complex.id_of(eta))) {
        out.push_back(complex.simplex(s));
    }
    return out;
}

namespace {

VertexId next_free_vertex(const SimplicialComplex& complex) {
    const auto vs = complex.vertices();
    return vs.empty() ? 0 : *std::max_element(vs.begin(), vs.end()) + 1;
}

}  // namespace

JoinResult join(const SimplicialComplex& left, const SimplicialComplex& right) {
    JoinResult out;
    const auto left_vertices = left.vertices();
    const auto right_vertices = right.vertices();
    const bool collide = std::any_of(right_vertices.begin(), right_vertices.end(), [&](VertexId v) {
        return std::binary_search(left_vertices.begin(), left_vertices.end(), v);
    });
    const VertexId shift = collide ? next_free_vertex(left) : 0;
    for (VertexId v : right_vertices) {
        out.right_renumbering.emplace(v, v + shift);
    }
    auto renumber = [&](const Simplex& s) {
        std::vector<VertexId> vs;
        for (VertexId v : s) {
            vs.push_back(out.right_renumbering.at(v));
        }
        return Simplex(std::move(vs));
    };

    std::vector<Simplex> maximal;
    if (right.empty()) {
        maximal = left.maximal_simplices();
    } else if (left.empty()) {
        for (const Simplex& t : right.maximal_simplices()) {
            maximal.push_back(renumber(t));
        }
    } else {
        for (const Simplex& s : left.maximal_simplices()) {
            for (const Simplex& t : right.maximal_simplices()) {
                maximal.push_back(simplex_union(s, renumber(t)));
            }
        }
    }
    out.complex = SimplicialComplex::from_maximal(std::move(maximal));
    return out;
}

SimplicialComplex cone(const SimplicialComplex& complex) {
    const VertexId apex = next_free_vertex(complex);
    return join(complex, SimplicialComplex::from_maximal({Simplex{apex}})).complex;
}

SimplicialComplex suspension(const SimplicialComplex& complex) {
    const VertexId a = next_free_vertex(complex);
    return join(complex, SimplicialComplex::from_maximal({Simplex{a}, Simplex{a + 1}})).complex;
}

std::size_t coface_count(const Simplex& eta, const SimplicialComplex& complex) {
    if (eta.dim() != complex.dimension() - 1) {
        throw std::invalid_argument("coface_count: simplex " + eta.to_string() + " must have dimension n-1 = " +
                                    std::to_string(complex.dimension() - 1));
    }
    return complex.immediate_cofaces(complex.id_of(eta)).size();
}

bool is_two_pseudomanifold(const SimplicialComplex& complex) {
    const int n = complex.dimension();
    if (n < 1) {
        return false;
    }
    for (SimplexId id : complex.ids_of_dim(n - 1)) {
        if (complex.immediate_cofaces(id).size() != 2) {
            return false;
        }
    }
    return true;
}

bool link_fvector_identity_check(const SimplicialComplex& complex, int p) {
    const int n = complex.dimension();
    if (!is_two_pseudomanifold(complex)) {
        throw std::invalid_argument("link_fvector_identity_check requires a two-pseudomanifold");
    }
    if (p < 0 || p > n - 2) {
        throw std::invalid_argument("link_fvector_identity_check requires 0 <= p <= n-2");
    }
    for (SimplexId id : complex.ids_of_dim(p)) {
        const FVector f = link(complex.simplex(id), complex).f_vector();
        const auto lower = static_cast<std::size_t>(n - p - 2);
        if (2 * f[lower] != (n - p) * f[lower + 1]) {
            return false;
        }
    }
    return true;
}

}  // namespace ascurv
