#include "jumpcp/prefix_stats.hpp"

namespace jumpcp {

PrefixStats::PrefixStats(const IncrementGrid& grid, ZGrid zgrid,
                         const std::optional<std::vector<double>>& weights)
    : zgrid_(std::move(zgrid)), n_(grid.n()), k_n_(grid.k_n()), weighted_(weights.has_value()) {
    if (weighted_ && weights->size() != n_)
        throw ConfigError("prefix stats: weight vector length must equal n");

    columns_.assign(zgrid_.size(), std::vector<double>(n_ + 1, 0.0));
    weight_prefix_.assign(n_ + 1, 0.0);

    for (std::size_t j = 1; j <= n_; ++j) {
        double w = weighted_ ? (*weights)[j - 1] : 1.0;
        weight_prefix_[j] = weight_prefix_[j - 1] + w;
        double incr = grid.increments[j - 1];
        for (std::size_t k = 0; k < zgrid_.size(); ++k) {
            columns_[k][j] =
                columns_[k][j - 1] + (in_tail(incr, zgrid_[k]) ? w : 0.0);
        }
    }
}

double PrefixStats::eta(std::size_t k) const {
    if (weighted_)
        throw ConfigError("prefix stats: eta_n is defined for the all-ones construction");
    return columns_[k].back() / static_cast<double>(n_);
}

} // namespace jumpcp
