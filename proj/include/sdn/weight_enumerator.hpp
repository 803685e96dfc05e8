#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "sdn/error.hpp"
#include "sdn/gf2/bit_matrix.hpp"
#include "sdn/gf2/bit_vector.hpp"
#include "sdn/self_dual.hpp"
#include "sdn/weight_distribution.hpp"

namespace sdn {

inline constexpr std::size_t kMaxEnumerationLength = 128;

/// Restricts enumeration to messages whose first `prefix_bits` coefficients
/// are fixed: bit i of `prefix_value` is the coefficient of generator row i.
struct Partition {
  unsigned prefix_bits = 0;
  std::uint64_t prefix_value = 0;
};

struct EnumerationOptions {
  std::optional<Partition> partition;
  /// When nonzero, stop as soon as a codeword of weight 0 < w < abort_below appears.
  std::size_t abort_below = 0;
  /// Put the all-ones word into the basis, walk only the other k-1 rows and
  /// credit each weight w to both A_w and A_{n-w}. Needs independent rows.
  bool halve_with_all_ones = false;
};

struct EnumerationResult {
  WeightDistribution distribution;
  bool aborted = false;
};

namespace detail {

template <std::size_t W>
using Packed = std::array<Word, W>;

template <std::size_t W>
Packed<W> pack(const BitVector& v) {
  Packed<W> p{};
  const auto words = v.words();
  std::copy(words.begin(), words.end(), p.begin());
  return p;
}

template <std::size_t W>
inline unsigned packed_weight(const Packed<W>& p) noexcept {
  unsigned w = 0;
  for (std::size_t k = 0; k < W; ++k) w += static_cast<unsigned>(std::popcount(p[k]));
  return w;
}

// Reflected Gray walk over every combination of `rows`, starting from `cw`.
// Step s XORs row countr_zero(s) into the running codeword. Counts go into
// hist[0..n]. Returns true if aborted. `light` is abort_below - 1 (0 disables):
// a weight w with 0 < w < abort_below satisfies (w - 1) < light in unsigned
// arithmetic.
template <std::size_t W, bool Mirror, bool Abortable>
bool gray_walk(std::span<const Packed<W>> rows, Packed<W> cw, std::uint64_t* hist, unsigned n, unsigned light,
               const std::atomic<bool>* stop) {
  constexpr std::uint64_t kPollMask = (std::uint64_t{1} << 20) - 1;
  auto is_light = [&](unsigned w) noexcept {
    if constexpr (!Abortable) return false;
    if (w - 1U < light) return true;
    if constexpr (Mirror) return n - w - 1U < light;
    return false;
  };

  unsigned w = packed_weight<W>(cw);
  ++hist[w];
  if (is_light(w)) return true;

  const std::uint64_t steps = std::uint64_t{1} << rows.size();
  const Packed<W>* r = rows.data();
  for (std::uint64_t s = 1; s < steps; ++s) {
    const Packed<W>& row = r[std::countr_zero(s)];
    for (std::size_t k = 0; k < W; ++k) cw[k] ^= row[k];
    w = packed_weight<W>(cw);
    ++hist[w];
    if (is_light(w)) return true;
    if constexpr (Abortable)
      if ((s & kPollMask) == 0 && stop != nullptr && stop->load(std::memory_order_relaxed)) return true;
  }
  return false;
}

// Returns the basis to walk: the rows of g, or (when halving) a basis of the
// same code with the all-ones word removed.
inline std::vector<BitVector> walk_basis(const BitMatrix& g, bool halve) {
  if (!halve) return g.rows();
  const RowEchelon e = rref(g);
  if (e.pivots.size() != g.num_rows())
    throw DomainError("all-ones halving needs linearly independent generator rows");
  const BitVector ones = BitVector::ones(g.num_cols());
  if (!row_space_contains(e, ones)) throw DomainError("all-ones halving needs the all-ones word in the code");
  // ones = sum of echelon rows i with ones[pivot_i] = 1; all pivots are set, so
  // every echelon row participates and any one of them can be exchanged.
  std::vector<BitVector> out(e.matrix.rows().begin(), e.matrix.rows().end() - 1);
  return out;
}

template <std::size_t W>
EnumerationResult enumerate_packed(const BitMatrix& g, const EnumerationOptions& opts, const std::atomic<bool>* stop) {
  const std::size_t n = g.num_cols();
  const std::vector<BitVector> basis = walk_basis(g, opts.halve_with_all_ones);

  std::vector<Packed<W>> rows;
  rows.reserve(basis.size());
  for (const auto& b : basis) rows.push_back(pack<W>(b));

  Packed<W> start{};
  std::size_t fixed = 0;
  if (opts.partition) {
    const Partition& p = *opts.partition;
    if (p.prefix_bits > rows.size())
      throw DomainError("partition prefix of " + std::to_string(p.prefix_bits) + " bits exceeds " +
                        std::to_string(rows.size()) + " walkable rows");
    if (p.prefix_bits < 64 && p.prefix_value >= (std::uint64_t{1} << p.prefix_bits))
      throw DomainError("partition prefix value out of range");
    for (unsigned i = 0; i < p.prefix_bits; ++i)
      if ((p.prefix_value >> i) & 1U)
        for (std::size_t k = 0; k < W; ++k) start[k] ^= rows[i][k];
    fixed = p.prefix_bits;
  }
  const std::span<const Packed<W>> free(rows.data() + fixed, rows.size() - fixed);
  if (free.size() > 62) throw UnsupportedLengthError("too many message bits to enumerate");

  std::array<std::uint64_t, kMaxEnumerationLength + 1> hist{};
  const unsigned light = opts.abort_below == 0 ? 0U : static_cast<unsigned>(opts.abort_below - 1);
  const bool abortable = light != 0 || stop != nullptr;
  const auto walk = [&]<bool Mirror, bool Abortable>() {
    return gray_walk<W, Mirror, Abortable>(free, start, hist.data(), static_cast<unsigned>(n), light, stop);
  };
  bool aborted = false;
  if (opts.halve_with_all_ones) {
    aborted = abortable ? walk.template operator()<true, true>() : walk.template operator()<true, false>();
  } else {
    aborted = abortable ? walk.template operator()<false, true>() : walk.template operator()<false, false>();
  }

  WeightDistribution dist(n);
  for (std::size_t w = 0; w <= n; ++w) {
    dist.at(w) = hist[w];
    if (opts.halve_with_all_ones) dist.at(w) += hist[n - w];
  }
  return {std::move(dist), aborted};
}

}  // namespace detail

/// Enumerates every GF(2) combination of the rows of g in Gray-code order and
/// counts codeword weights. Rows are taken as given, so dependent rows count
/// repeated codewords.
inline EnumerationResult enumerate_weights(const BitMatrix& g, const EnumerationOptions& opts = {},
                                           const std::atomic<bool>* stop = nullptr) {
  const std::size_t n = g.num_cols();
  if (n > kMaxEnumerationLength)
    throw UnsupportedLengthError("weight enumeration supports length up to " +
                                 std::to_string(kMaxEnumerationLength) + ", got " + std::to_string(n));
  if (n <= 64) return detail::enumerate_packed<1>(g, opts, stop);
  return detail::enumerate_packed<2>(g, opts, stop);
}

inline WeightDistribution weight_distribution(const BitMatrix& g, std::optional<Partition> partition = {}) {
  EnumerationOptions opts;
  opts.partition = partition;
  return enumerate_weights(g, opts).distribution;
}

inline WeightDistribution weight_distribution(const SelfDualCode& c, std::optional<Partition> partition = {}) {
  return weight_distribution(c.generator(), partition);
}

/// Thread count from std::thread::hardware_concurrency(), capped by the
/// SDN_MAX_THREADS environment variable when set.
inline unsigned default_thread_count() {
  unsigned t = std::max(1U, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("SDN_MAX_THREADS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v > 0) t = std::min(t, static_cast<unsigned>(v));
  }
  return t;
}

struct ParallelOptions {
  unsigned threads = 0;  // 0: default_thread_count()
  std::size_t abort_below = 0;
  bool halve_with_all_ones = false;
};

/// Splits the walk into 2^t prefix partitions (t = ceil(log2 threads)) and
/// runs them on a thread pool. Partition results are summed in index order.
inline EnumerationResult parallel_weight_distribution(const BitMatrix& g, const ParallelOptions& popts = {}) {
  const unsigned threads = popts.threads == 0 ? default_thread_count() : popts.threads;
  const std::size_t walkable = g.num_rows() - (popts.halve_with_all_ones ? 1 : 0);
  unsigned t = 0;
  while ((1U << t) < threads) ++t;
  t = static_cast<unsigned>(std::min<std::size_t>(t, walkable));
  const std::size_t parts = std::size_t{1} << t;

  std::vector<std::optional<EnumerationResult>> results(parts);
  std::atomic<bool> stop{false};
  auto run = [&](std::size_t first) {
    for (std::size_t p = first; p < parts; p += threads) {
      if (stop.load(std::memory_order_relaxed)) return;
      EnumerationOptions opts;
      opts.partition = Partition{t, p};
      opts.abort_below = popts.abort_below;
      opts.halve_with_all_ones = popts.halve_with_all_ones;
      results[p] = enumerate_weights(g, opts, popts.abort_below != 0 ? &stop : nullptr);
      if (results[p]->aborted) stop.store(true);
    }
  };

  if (threads == 1 || parts == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < std::min<std::size_t>(threads, parts); ++i) pool.emplace_back(run, i);
  }

  EnumerationResult total{WeightDistribution(g.num_cols()), stop.load()};
  for (const auto& r : results) {
    if (!r) {
      total.aborted = true;
      continue;
    }
    total.distribution += r->distribution;
    total.aborted = total.aborted || r->aborted;
  }
  return total;
}

/// Looks for a nonzero combination of at most `max_rows` generator rows with
/// weight below `floor`. Finding one proves the minimum distance is < floor.
inline std::optional<BitVector> probe_light_codeword(const BitMatrix& g, std::size_t floor, unsigned max_rows = 3) {
  const auto& r = g.rows();
  const std::size_t k = r.size();
  auto light = [&](const BitVector& v) { return !v.is_zero() && v.weight() < floor; };
  for (std::size_t a = 0; a < k; ++a) {
    if (light(r[a])) return r[a];
    if (max_rows < 2) continue;
    for (std::size_t b = a + 1; b < k; ++b) {
      const BitVector ab = r[a] ^ r[b];
      if (light(ab)) return ab;
      if (max_rows < 3) continue;
      for (std::size_t c = b + 1; c < k; ++c) {
        BitVector abc = ab ^ r[c];
        if (light(abc)) return abc;
      }
    }
  }
  return std::nullopt;
}

/// Full distribution of c, or nullopt as soon as a codeword of weight
/// 0 < w < floor is found.
inline std::optional<WeightDistribution> weight_distribution_with_floor(const SelfDualCode& c, std::size_t floor,
                                                                        unsigned threads = 0) {
  if (probe_light_codeword(c.generator(), floor)) return std::nullopt;
  ParallelOptions opts;
  opts.threads = threads;
  opts.abort_below = floor;
  EnumerationResult r = parallel_weight_distribution(c.generator(), opts);
  if (r.aborted) return std::nullopt;
  return std::move(r.distribution);
}

}  // namespace sdn
