#include "smoothlab/core/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "smoothlab/core/errors.hpp"

namespace smoothlab {

namespace {

constexpr long double kTwo64 = 18446744073709551616.0L;
constexpr double kNormalizationTolerance = 1e-12;

}  // namespace

BaseMeasure BaseMeasure::uniform_grid(std::uint32_t side) {
  if (side == 0) throw ConfigError("grid side must be positive");
  return BaseMeasure(side);
}

std::uint64_t BaseMeasure::last_index() const {
  return is_unit() ? std::numeric_limits<std::uint64_t>::max() : cells();
}

long double BaseMeasure::measure_of(std::uint64_t first, std::uint64_t last) const {
  const long double count = static_cast<long double>(last - first) + 1.0L;
  return is_unit() ? count / kTwo64 : count / static_cast<long double>(cells());
}

Instance BaseMeasure::make(std::uint64_t index) const {
  return is_unit() ? Instance::dyadic(index) : Instance::grid(index, side_);
}

bool BaseMeasure::contains(const Instance& x) const {
  if (is_unit()) return x.is_dyadic();
  return x.is_grid() && x.side() == side_;
}

Instance BaseMeasure::sample(Rng& rng) const {
  return make(rng.uniform_between(first_index(), last_index()));
}

std::string BaseMeasure::to_string() const {
  return is_unit() ? "uniform_unit" : "uniform_grid(" + std::to_string(side_) + ")";
}

SmoothDistribution::SmoothDistribution(BaseMeasure domain, std::vector<DensityPiece> pieces)
    : domain_(domain), pieces_(std::move(pieces)) {
  std::sort(pieces_.begin(), pieces_.end(),
            [](const DensityPiece& a, const DensityPiece& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& p = pieces_[i];
    if (p.first > p.last || p.first < domain_.first_index() || p.last > domain_.last_index()) {
      throw DomainError("density piece outside the domain of " + domain_.to_string());
    }
    if (i > 0 && pieces_[i - 1].last >= p.first) throw DomainError("density pieces overlap");
    if (!std::isfinite(p.mass) || p.mass < 0.0) throw ConfigError("density piece mass must be finite and >= 0");
  }
  cumulative_.reserve(pieces_.size());
  long double acc = 0.0L;
  long double bound = 0.0L;
  for (const auto& p : pieces_) {
    acc += p.mass;
    cumulative_.push_back(static_cast<double>(acc));
    if (p.mass > 0.0) bound = std::max(bound, p.mass / domain_.measure_of(p.first, p.last));
  }
  total_mass_ = static_cast<double>(acc);
  density_bound_ = static_cast<double>(bound);
}

SmoothDistribution SmoothDistribution::base(const BaseMeasure& mu) {
  return SmoothDistribution(mu, {{mu.first_index(), mu.last_index(), 1.0}});
}

SmoothDistribution SmoothDistribution::uniform_range(const BaseMeasure& mu, std::uint64_t first,
                                                     std::uint64_t last) {
  return SmoothDistribution(mu, {{first, last, 1.0}});
}

SmoothDistribution SmoothDistribution::point_mass(const BaseMeasure& grid, std::uint64_t cell) {
  if (!grid.is_grid()) throw DomainError("point masses are only representable on the grid domain");
  return SmoothDistribution(grid, {{cell, cell, 1.0}});
}

bool SmoothDistribution::is_normalized() const {
  return std::abs(total_mass_ - 1.0) <= kNormalizationTolerance;
}

Instance sample_instance(const SmoothDistribution& d, Rng& rng) {
  if (!d.is_normalized()) {
    throw ConfigError("cannot sample from an unnormalized distribution (total mass " +
                      std::to_string(d.total_mass()) + ")");
  }
  const double u = rng.uniform01() * d.total_mass_;
  auto it = std::upper_bound(d.cumulative_.begin(), d.cumulative_.end(), u);
  std::size_t k = static_cast<std::size_t>(it - d.cumulative_.begin());
  if (k >= d.pieces_.size()) k = d.pieces_.size() - 1;
  // Zero-mass pieces never get selected: upper_bound skips equal prefixes.
  while (d.pieces_[k].mass == 0.0 && k + 1 < d.pieces_.size()) ++k;
  const auto& piece = d.pieces_[k];
  return d.domain_.make(rng.uniform_between(piece.first, piece.last));
}

bool smoothness_certificate(const SmoothDistribution& d, const BaseMeasure& mu, double sigma) {
  if (!(d.domain() == mu)) {
    throw DomainError("distribution on " + d.domain().to_string() + " checked against " + mu.to_string());
  }
  if (!(sigma > 0.0)) return false;
  // density <= 1/sigma  <=>  mass * sigma <= mu(piece), evaluated in extended precision.
  for (const auto& p : d.pieces()) {
    if (p.mass == 0.0) continue;
    if (static_cast<long double>(p.mass) * sigma > mu.measure_of(p.first, p.last)) return false;
  }
  return true;
}

SmoothProcess::SmoothProcess(BaseMeasure mu, double sigma, std::vector<SmoothDistribution> distributions)
    : mu_(mu), sigma_(sigma), distributions_(std::move(distributions)) {
  if (!(sigma_ > 0.0 && sigma_ <= 1.0)) throw ConfigError("sigma must lie in (0, 1]");
  for (std::size_t t = 0; t < distributions_.size(); ++t) {
    const auto& d = distributions_[t];
    if (!d.is_normalized()) throw ConfigError("process member " + std::to_string(t) + " is not normalized");
    if (!smoothness_certificate(d, mu_, sigma_)) {
      throw ConfigError("process member " + std::to_string(t) + " has density " +
                        std::to_string(d.density_bound()) + " > 1/sigma = " + std::to_string(1.0 / sigma_));
    }
  }
}

SmoothProcess SmoothProcess::stationary(const BaseMeasure& mu, double sigma, std::size_t horizon) {
  return SmoothProcess(mu, sigma, std::vector<SmoothDistribution>(horizon, SmoothDistribution::base(mu)));
}

std::vector<Instance> SmoothProcess::sample(Rng& rng) const {
  std::vector<Instance> xs;
  xs.reserve(distributions_.size());
  for (const auto& d : distributions_) xs.push_back(sample_instance(d, rng));
  return xs;
}

}  // namespace smoothlab
