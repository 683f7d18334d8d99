#include "ascurv/stratification.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include <omp.h>

namespace ascurv {

std::string to_string(StratumTier t) {
    switch (t) {
        case StratumTier::exact: return "exact";
        case StratumTier::heuristic: return "heuristic";
        case StratumTier::fallback: return "fallback";
        case StratumTier::override_: return "override";
    }
    return "unknown";
}

long suspended_points_euler_characteristic(int points, int k) {
    long chi = points;
    for (int i = 0; i < k; ++i) {
        chi = 2 - chi;
    }
    return chi;
}

bool is_suspension_of_points(const SimplicialComplex& graph, int r) {
    if (graph.dimension() > 1 || r < 0) {
        return false;
    }
    const auto vertex_ids = graph.ids_of_dim(0);
    const auto edge_ids = graph.ids_of_dim(1);
    if (r == 0) {
        return vertex_ids.size() == 2 && edge_ids.empty();
    }
    if (vertex_ids.empty()) {
        return false;
    }
    std::unordered_map<VertexId, std::vector<VertexId>> adjacency;
    for (SimplexId v : vertex_ids) {
        adjacency[graph.simplex(v)[0]];
    }
    for (SimplexId e : edge_ids) {
        const Simplex& s = graph.simplex(e);
        adjacency[s[0]].push_back(s[1]);
        adjacency[s[1]].push_back(s[0]);
    }
    std::vector<VertexId> branch;
    for (const auto& [v, nbrs] : adjacency) {
        if (nbrs.size() != 2) {
            branch.push_back(v);
        }
    }
    auto connected = [&] {
        std::set<VertexId> seen{adjacency.begin()->first};
        std::vector<VertexId> todo{adjacency.begin()->first};
        while (!todo.empty()) {
            const VertexId v = todo.back();
            todo.pop_back();
            for (VertexId w : adjacency[v]) {
                if (seen.insert(w).second) {
                    todo.push_back(w);
                }
            }
        }
        return seen.size() == adjacency.size();
    };
    if (!connected()) {
        return false;
    }
    if (r == 2) {
        return branch.empty();  // connected and 2-regular: a circle
    }
    if (branch.size() != 2) {
        return false;
    }
    std::sort(branch.begin(), branch.end());
    const VertexId a = branch[0];
    const VertexId b = branch[1];
    if (adjacency[a].size() != static_cast<std::size_t>(r) || adjacency[b].size() != static_cast<std::size_t>(r)) {
        return false;
    }
    // Every arc leaving a must run through degree-2 vertices and end at b.
    for (VertexId start : adjacency[a]) {
        VertexId prev = a;
        VertexId cur = start;
        while (cur != a && cur != b) {
            const auto& nbrs = adjacency[cur];
            const VertexId next = (nbrs[0] == prev) ? nbrs[1] : nbrs[0];
            prev = cur;
            cur = next;
        }
        if (cur != b) {
            return false;
        }
    }
    return true;
}

namespace {

struct Classification {
    StratumRecord record;
    std::string warning;
};

StratumRecord make_record(int r, StratumTier tier) { return {r, Rational(r, 2), tier}; }

Classification classify(const SimplicialComplex& k, SimplexId id) {
    const int n = k.dimension();
    const int p = k.dim_of(id);
    if (p == n) {
        return {make_record(2, StratumTier::exact), {}};
    }
    if (p == n - 1) {
        return {make_record(static_cast<int>(k.immediate_cofaces(id).size()), StratumTier::exact), {}};
    }

    std::set<int> non_two;
    for (SimplexId s : k.star_ids(id)) {
        if (k.dim_of(s) == n - 1) {
            const int c = static_cast<int>(k.immediate_cofaces(s).size());
            if (c != 2) {
                non_two.insert(c);
            }
        }
    }
    if (non_two.size() != 1) {
        return {make_record(2, StratumTier::exact), {}};
    }
    const int r0 = *non_two.begin();
    const Simplex& eta = k.simplex(id);
    const SimplicialComplex lk = link(eta, k);

    if (p == n - 2) {
        if (is_suspension_of_points(lk, r0)) {
            return {make_record(r0, StratumTier::exact), {}};
        }
        return {make_record(2, StratumTier::fallback),
                eta.to_string() + ": link is not a suspension of " + std::to_string(r0) +
                    " points; assigned r = 2"};
    }

    const int suspensions = n - 1 - p;
    bool matches = lk.euler_characteristic() == suspended_points_euler_characteristic(r0, suspensions);
    const int ridge = n - p - 2;
    for (SimplexId s : lk.ids_of_dim(ridge)) {
        const auto c = static_cast<int>(lk.immediate_cofaces(s).size());
        matches = matches && (c == 2 || c == r0);
    }
    if (matches) {
        return {make_record(r0, StratumTier::heuristic),
                eta.to_string() + ": r = " + std::to_string(r0) + " from link Euler characteristic (heuristic)"};
    }
    return {make_record(2, StratumTier::fallback),
            eta.to_string() + ": candidate r = " + std::to_string(r0) + " rejected by link test; assigned r = 2"};
}

}  // namespace

StratumAssignment stratify(const SimplicialComplex& complex, const StratumOverrides& overrides) {
    const auto total = static_cast<std::int64_t>(complex.size());
    std::vector<Classification> results(complex.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < total; ++i) {
        results[static_cast<std::size_t>(i)] = classify(complex, static_cast<SimplexId>(i));
    }

    std::vector<StratumRecord> records;
    std::vector<std::string> warnings;
    records.reserve(results.size());
    for (auto& c : results) {
        records.push_back(c.record);
        if (!c.warning.empty()) {
            warnings.push_back(std::move(c.warning));
        }
    }
    for (const auto& [simplex, r] : overrides) {
        const auto id = complex.find(simplex);
        if (!id) {
            throw std::invalid_argument("override references unknown simplex " + simplex.to_string());
        }
        if (r < 0) {
            throw std::invalid_argument("override for " + simplex.to_string() + " has negative r");
        }
        records[*id] = make_record(r, StratumTier::override_);
    }
    return StratumAssignment(std::move(records), std::move(warnings));
}

Rational stratified_euler_characteristic(const SimplicialComplex& complex, const StratumAssignment& assignment) {
    if (assignment.size() != complex.size()) {
        throw std::invalid_argument("stratum assignment does not cover the complex");
    }
    Rational chi;
    for (SimplexId id = 0; id < complex.size(); ++id) {
        chi += alternating_sign(complex.dim_of(id)) * assignment[id].rank;
    }
    return chi;
}

}  // namespace ascurv
