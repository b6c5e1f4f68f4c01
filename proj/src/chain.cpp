#include "lrk/chain.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

#include "lrk/errors.hpp"

namespace lrk {

InteractionRange InteractionRange::power_law(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidParameter("alpha must be a finite positive number, got " + std::to_string(alpha));
  }
  InteractionRange r;
  r.alpha_ = alpha;
  r.short_range_ = false;
  return r;
}

std::string InteractionRange::to_string() const {
  if (short_range_) return "inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", alpha_);
  return buf;
}

InteractionRange InteractionRange::parse(const std::string& text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "inf" || lower == "infinity" || lower == "sr" || lower == "short-range") {
    return short_range();
  }
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw InvalidParameter("cannot parse alpha from '" + text + "'");
  }
  if (pos != text.size()) throw InvalidParameter("cannot parse alpha from '" + text + "'");
  return power_law(value);
}

void validate(const ChainParams& p) {
  if (p.L < 2 || p.L % 2 != 0) {
    throw InvalidParameter("L must be an even integer >= 2, got " + std::to_string(p.L));
  }
  if (!std::isfinite(p.J) || !std::isfinite(p.Delta) || !std::isfinite(p.mu)) {
    throw InvalidParameter("J, Delta and mu must be finite");
  }
}

void validate_for_engine(const ChainParams& p) {
  validate(p);
  if (!p.range.is_short_range() && !(p.range.alpha() > 1.0)) {
    throw InvalidParameter("engine operation requires alpha > 1, got " + p.range.to_string());
  }
}

}  // namespace lrk
