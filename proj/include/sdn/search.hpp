#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sdn/enumerator_params.hpp"
#include "sdn/error.hpp"
#include "sdn/gf2/bit_vector.hpp"
#include "sdn/neighbor.hpp"
#include "sdn/self_dual.hpp"
#include "sdn/weight_enumerator.hpp"

namespace sdn {

/// Counter-based generator: output i of a stream is SplitMix64's finalizer
/// applied to key + (i + 1) * 0x9E3779B97F4A7C15. Streams for different
/// (seed, position, candidate) triples are keyed independently, so any
/// candidate can be regenerated without replaying the others.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Key of the stream for one candidate of one chain position.
  static CounterRng for_candidate(std::uint64_t seed, std::uint64_t position, std::uint64_t candidate) noexcept {
    return CounterRng(mix(mix(mix(seed) ^ position) + candidate));
  }

  std::uint64_t operator()() noexcept { return mix(key_ + (++counter_) * 0x9E3779B97F4A7C15ULL); }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Inclusive 1-based coordinate range [first, last].
struct CoordinateRange {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t size() const noexcept { return last >= first ? last - first + 1 : 0; }
};

inline constexpr int kSampleRetryCap = 1000;

/// Uniform even-weight nonzero vector supported on `free` that is not a
/// codeword of `code`. The first |free|-1 coordinates are random bits and
/// the last one fixes the parity.
inline BitVector sample_x(CounterRng& rng, const CoordinateRange& free, const SelfDualCode& code) {
  const std::size_t n = code.length();
  if (free.first < 1 || free.last > n || free.size() < 2)
    throw SearchError("free coordinate range must lie in 1.." + std::to_string(n) + " and hold at least 2 coordinates");
  for (int attempt = 0; attempt < kSampleRetryCap; ++attempt) {
    BitVector x(n);
    bool parity = false;
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i + 1 < free.size(); ++i) {
      if (i % 64 == 0) bits = rng();
      if ((bits >> (i % 64)) & 1U) {
        x.set(free.first - 1 + i);
        parity = !parity;
      }
    }
    if (parity) x.set(free.last - 1);
    if (x.is_zero() || code.contains(x)) continue;
    return x;
  }
  throw SearchError("sample_x: no admissible vector after " + std::to_string(kSampleRetryCap) + " attempts");
}

struct SearchTarget {
  std::set<std::int64_t> gammas;
  std::set<std::pair<std::int64_t, std::int64_t>> gamma_beta;

  bool empty() const noexcept { return gammas.empty() && gamma_beta.empty(); }

  bool matches(const EnumeratorParams& p) const {
    if (empty()) return true;
    if (p.form != EnumeratorForm::W68_2) return false;
    return gammas.count(p.gamma) != 0 || gamma_beta.count({p.gamma, p.beta}) != 0;
  }
};

struct SearchConfig {
  std::uint64_t seed = 0;
  std::size_t max_candidates = 0;  // per chain position
  std::size_t chain_depth = 0;     // number of chain advances after the origin
  SearchTarget target;
  std::optional<CoordinateRange> free_coordinates;  // default n/2+1..n
  unsigned threads = 0;
};

struct SearchHit {
  std::vector<BitVector> chain;  // vectors applied from the origin, last one is the candidate
  std::optional<EnumeratorParams> params;  // set for length 68
  std::size_t d_min = 0;
  std::string fingerprint;
};

/// Classifies a candidate: the distribution when the code is extremal, nullopt otherwise.
inline std::optional<WeightDistribution> extremal_distribution(const SelfDualCode& c, unsigned threads) {
  // A Type II code has every weight divisible by 4, and the Type I bound is
  // never smaller than the Type II one, so the Type I bound is a valid floor.
  const std::size_t floor = extremal_bound(c.length(), CodeType::TypeI);
  auto dist = weight_distribution_with_floor(c, floor, threads);
  if (!dist || !is_extremal(c, *dist)) return std::nullopt;
  return dist;
}

/// Randomized neighbor search.
///
/// At chain position p (0..chain_depth) up to max_candidates vectors are
/// sampled against the current code. Every extremal neighbor whose
/// parameters match the target and whose echelon form is new becomes a hit.
/// The first extremal neighbor at a position (in candidate order) is the next
/// chain code; the search stops early when a position has none.
/// Construction errors are reported through `on_error` and skipped.
inline std::vector<SearchHit> run_search(const SelfDualCode& origin, const SearchConfig& cfg,
                                         const std::function<void(const std::string&)>& on_error = {}) {
  const std::size_t n = origin.length();
  const CoordinateRange free = cfg.free_coordinates.value_or(CoordinateRange{n / 2 + 1, n});
  if (free.first < 1 || free.last > n || free.size() < 2)
    throw SearchError("free coordinate range must lie in 1.." + std::to_string(n) + " and hold at least 2 coordinates");

  std::vector<SearchHit> hits;
  std::unordered_set<std::uint64_t> seen{origin.fingerprint()};
  NeighborChain chain(origin);

  for (std::size_t pos = 0; pos <= cfg.chain_depth; ++pos) {
    std::optional<BitVector> advance;
    for (std::size_t cand = 0; cand < cfg.max_candidates; ++cand) {
      try {
        CounterRng rng = CounterRng::for_candidate(cfg.seed, pos, cand);
        const BitVector x = sample_x(rng, free, chain.last());
        const SelfDualCode next = neighbor(chain.last(), x);
        const auto dist = extremal_distribution(next, cfg.threads);
        if (!dist) continue;
        if (!advance) advance = x;

        SearchHit hit;
        if (n == 68) hit.params = classify_enumerator(*dist);
        if (hit.params ? !cfg.target.matches(*hit.params) : !cfg.target.empty()) continue;
        if (!seen.insert(next.fingerprint()).second) continue;
        hit.chain = chain.vectors();
        hit.chain.push_back(x);
        hit.d_min = dist->min_distance();
        hit.fingerprint = next.fingerprint_hex();
        hits.push_back(std::move(hit));
      } catch (const Error& e) {
        if (on_error) on_error("position " + std::to_string(pos) + " candidate " + std::to_string(cand) + ": " + e.what());
      }
    }
    if (!advance || pos == cfg.chain_depth) break;
    chain = chain.extend(*advance);
  }
  return hits;
}

}  // namespace sdn
