#include "ascurv/angle_table.hpp"

#include <algorithm>
#include <stdexcept>

#include <omp.h>

namespace ascurv {

std::vector<AnglePair> all_angle_pairs(const SimplicialComplex& complex) {
    std::vector<AnglePair> out;
    for (SimplexId top : complex.ids_of_dim(complex.dimension())) {
        for (const Simplex& face : complex.simplex(top).faces()) {
            out.emplace_back(complex.id_of(face), top);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

AngleTable::AngleTable(const EmbeddedComplex& e, const AngleConfig& cfg)
    : AngleTable(e, all_angle_pairs(e.complex()), cfg, cfg.parallel ? Fill::parallel : Fill::serial) {}

AngleTable::AngleTable(const EmbeddedComplex& e, std::vector<AnglePair> pairs, const AngleConfig& cfg, Fill fill)
    : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    values_.resize(pairs_.size());

    AngleConfig per_pair = cfg;
    per_pair.parallel = false;  // parallelism is across pairs here
    const auto& k = e.complex();
    const auto total = static_cast<std::int64_t>(pairs_.size());
    if (fill == Fill::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < total; ++i) {
            const auto& [face, top] = pairs_[static_cast<std::size_t>(i)];
            values_[static_cast<std::size_t>(i)] = solid_angle(k.simplex(face), k.simplex(top), e, per_pair);
        }
    } else {
        for (std::int64_t i = 0; i < total; ++i) {
            const auto& [face, top] = pairs_[static_cast<std::size_t>(i)];
            values_[static_cast<std::size_t>(i)] = solid_angle(k.simplex(face), k.simplex(top), e, per_pair);
        }
    }
}

bool AngleTable::contains(SimplexId face, SimplexId top) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), AnglePair{face, top});
}

const AngleValue& AngleTable::at(SimplexId face, SimplexId top) const {
    const auto it = std::lower_bound(pairs_.begin(), pairs_.end(), AnglePair{face, top});
    if (it == pairs_.end() || *it != AnglePair{face, top}) {
        throw std::out_of_range("angle pair not in table");
    }
    return values_[static_cast<std::size_t>(it - pairs_.begin())];
}

}  // namespace ascurv
