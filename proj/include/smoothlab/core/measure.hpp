#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "smoothlab/core/instance.hpp"
#include "smoothlab/core/rng.hpp"

namespace smoothlab {

// The uniform base measure mu on one of the two domains.
class BaseMeasure {
 public:
  static BaseMeasure uniform_unit() { return BaseMeasure(0); }
  // Uniform over {1, ..., side^2}.
  static BaseMeasure uniform_grid(std::uint32_t side);

  bool is_unit() const { return side_ == 0; }
  bool is_grid() const { return side_ != 0; }
  std::uint32_t side() const { return side_; }
  // Number of grid cells; 0 for the unit domain.
  std::uint64_t cells() const { return static_cast<std::uint64_t>(side_) * side_; }

  // Smallest and largest representable index (numerator or cell).
  std::uint64_t first_index() const { return is_unit() ? 0 : 1; }
  std::uint64_t last_index() const;

  // mu of the index range [first, last].
  long double measure_of(std::uint64_t first, std::uint64_t last) const;

  Instance make(std::uint64_t index) const;
  bool contains(const Instance& x) const;
  Instance sample(Rng& rng) const;

  std::string to_string() const;

  friend bool operator==(const BaseMeasure&, const BaseMeasure&) = default;

 private:
  explicit BaseMeasure(std::uint32_t side) : side_(side) {}
  std::uint32_t side_;
};

// Piece of a piecewise-constant density: probability `mass` spread uniformly
// (with respect to mu) over the index range [first, last].
struct DensityPiece {
  std::uint64_t first;
  std::uint64_t last;
  double mass;
};

// A distribution with piecewise-constant density against a base measure. The
// family is small enough that sup dnu/dmu is known exactly.
class SmoothDistribution {
 public:
  // Throws DomainError on out-of-range or overlapping pieces and ConfigError
  // on negative or non-finite masses. Normalization is checked on use.
  SmoothDistribution(BaseMeasure domain, std::vector<DensityPiece> pieces);

  static SmoothDistribution base(const BaseMeasure& mu);
  static SmoothDistribution uniform_range(const BaseMeasure& mu, std::uint64_t first, std::uint64_t last);
  // Dirac mass on one grid cell.
  static SmoothDistribution point_mass(const BaseMeasure& grid, std::uint64_t cell);

  const BaseMeasure& domain() const { return domain_; }
  std::span<const DensityPiece> pieces() const { return pieces_; }

  double total_mass() const { return total_mass_; }
  bool is_normalized() const;

  // sup over the support of dnu/dmu.
  double density_bound() const { return density_bound_; }

 private:
  BaseMeasure domain_;
  std::vector<DensityPiece> pieces_;
  std::vector<double> cumulative_;
  double total_mass_ = 0.0;
  double density_bound_ = 0.0;

  friend Instance sample_instance(const SmoothDistribution&, Rng&);
};

// x ~ d. Throws ConfigError when d is not normalized.
Instance sample_instance(const SmoothDistribution& d, Rng& rng);

// True iff nu(E) <= mu(E) / sigma for every event, i.e. every piece has
// density at most 1/sigma. Throws DomainError if d lives on another domain.
bool smoothness_certificate(const SmoothDistribution& d, const BaseMeasure& mu, double sigma);

// nu_1, ..., nu_T fixed before play, each certified sigma-smooth against mu.
class SmoothProcess {
 public:
  // Throws ConfigError if sigma is outside (0, 1] or any member fails its
  // certificate or normalization.
  SmoothProcess(BaseMeasure mu, double sigma, std::vector<SmoothDistribution> distributions);

  // (mu, ..., mu), certified for any sigma.
  static SmoothProcess stationary(const BaseMeasure& mu, double sigma, std::size_t horizon);

  const BaseMeasure& base() const { return mu_; }
  double sigma() const { return sigma_; }
  std::size_t size() const { return distributions_.size(); }
  const SmoothDistribution& operator[](std::size_t t) const { return distributions_[t]; }
  std::span<const SmoothDistribution> distributions() const { return distributions_; }

  std::vector<Instance> sample(Rng& rng) const;

 private:
  BaseMeasure mu_;
  double sigma_;
  std::vector<SmoothDistribution> distributions_;
};

}  // namespace smoothlab
