#pragma once

#include <limits>
#include <string>

namespace lrk {

/// Decay law of the pairing term: either a power law 1/d^alpha or the
/// nearest-neighbour (alpha = infinity) limit, which is kept exact.
class InteractionRange {
 public:
  static InteractionRange power_law(double alpha);
  static InteractionRange short_range() noexcept { return InteractionRange{}; }

  bool is_short_range() const noexcept { return short_range_; }
  /// Exponent; +infinity for the short-range limit.
  double alpha() const noexcept {
    return short_range_ ? std::numeric_limits<double>::infinity() : alpha_;
  }

  /// "inf" or the exponent with 17 significant digits.
  std::string to_string() const;
  /// Accepts "inf", "infinity" or a positive number.
  static InteractionRange parse(const std::string& text);

  friend bool operator==(const InteractionRange&, const InteractionRange&) = default;

 private:
  InteractionRange() = default;
  double alpha_ = 0.0;
  bool short_range_ = true;
};

/// Static description of the working medium.
struct ChainParams {
  int L = 2;
  double J = 1.0;
  double Delta = 1.0;
  double mu = 0.0;
  InteractionRange range = InteractionRange::short_range();

  friend bool operator==(const ChainParams&, const ChainParams&) = default;
};

/// Throws InvalidParameter unless L is even and >= 2 and all couplings are finite.
void validate(const ChainParams& params);

/// Engine-level check: additionally requires alpha > 1 for power-law chains.
void validate_for_engine(const ChainParams& params);

inline ChainParams with_mu(ChainParams params, double mu) {
  params.mu = mu;
  return params;
}

inline ChainParams with_range(ChainParams params, InteractionRange range) {
  params.range = range;
  return params;
}

}  // namespace lrk
