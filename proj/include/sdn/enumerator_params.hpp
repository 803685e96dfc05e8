#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "sdn/error.hpp"
#include "sdn/weight_distribution.hpp"

namespace sdn {

// Extremal [68,34,12] self-dual codes have one of two weight enumerators:
//   W68_1 = 1 + (442 + 4b) y^12 + (10864 - 8b) y^14 + ...,  104 <= b <= 1358
//   W68_2 = 1 + (442 + 4b) y^12 + (14960 - 8b - 256g) y^14 + ...,  0 <= g <= 9
// Only A_12 and A_14 are used to recover (form, b, g).

enum class EnumeratorForm { W68_1, W68_2, NonExtremal, Unrecognized };

inline std::string_view to_string(EnumeratorForm f) noexcept {
  switch (f) {
    case EnumeratorForm::W68_1: return "W68_1";
    case EnumeratorForm::W68_2: return "W68_2";
    case EnumeratorForm::NonExtremal: return "NonExtremal";
    case EnumeratorForm::Unrecognized: return "Unrecognized";
  }
  return "?";
}

struct EnumeratorParams {
  EnumeratorForm form = EnumeratorForm::Unrecognized;
  std::int64_t beta = 0;
  std::int64_t gamma = 0;  // meaningful only for W68_2

  friend bool operator==(const EnumeratorParams&, const EnumeratorParams&) = default;
};

inline constexpr std::int64_t kW68A12Base = 442;
inline constexpr std::int64_t kW68_1A14Base = 10864;
inline constexpr std::int64_t kW68_2A14Base = 14960;

inline std::int64_t w68_a12(std::int64_t beta) { return kW68A12Base + 4 * beta; }
inline std::int64_t w68_2_a14(std::int64_t beta, std::int64_t gamma) { return kW68_2A14Base - 8 * beta - 256 * gamma; }
inline std::int64_t w68_1_a14(std::int64_t beta) { return kW68_1A14Base - 8 * beta; }

inline EnumeratorParams classify_enumerator(const WeightDistribution& dist) {
  if (dist.length() != 68)
    throw DomainError("enumerator classification is defined for length 68 only, got " + std::to_string(dist.length()));

  EnumeratorParams out;
  if (dist.min_distance() < 12) {
    out.form = EnumeratorForm::NonExtremal;
    return out;
  }
  const auto a12 = static_cast<std::int64_t>(dist[12]);
  const auto a14 = static_cast<std::int64_t>(dist[14]);
  if (a12 < kW68A12Base || (a12 - kW68A12Base) % 4 != 0) return out;
  const std::int64_t beta = (a12 - kW68A12Base) / 4;
  out.beta = beta;

  const std::int64_t num = kW68_2A14Base - 8 * beta - a14;
  if (num % 256 != 0) return out;
  const std::int64_t g = num / 256;
  if (g >= 0 && g <= 9) {
    out.form = EnumeratorForm::W68_2;
    out.gamma = g;
  } else if (g == 16 && beta >= 104 && beta <= 1358) {
    // 14960 - 256 * 16 = 10864, i.e. A_14 = 10864 - 8 beta.
    out.form = EnumeratorForm::W68_1;
  }
  return out;
}

}  // namespace sdn
