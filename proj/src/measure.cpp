#include <algorithm>
#include <atomic>
#include <bit>
#include <random>
#include <thread>

#include "carpet/boundary.hpp"

namespace carpet {

namespace {

constexpr std::size_t kChunk = 512;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::array<std::size_t, 9> run_chunk(std::uint64_t stream_seed, std::size_t count, std::size_t prefix_len) {
  std::mt19937_64 rng(stream_seed);
  std::array<std::size_t, 9> hist{};
  for (std::size_t s = 0; s < count; ++s) {
    unsigned seen = 0;
    for (std::size_t i = 0; i < prefix_len; ++i) seen |= 1u << (rng() >> 61);
    ++hist[static_cast<std::size_t>(std::popcount(seen))];
  }
  return hist;
}

}  // namespace

MeasureResult sample_measure(std::size_t n_samples, std::size_t prefix_len, std::uint64_t seed,
                             unsigned workers) {
  if (n_samples == 0) throw std::invalid_argument("sample count must be >= 1");
  const std::size_t chunks = (n_samples + kChunk - 1) / kChunk;
  std::vector<std::array<std::size_t, 9>> partial(chunks);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t c; (c = next.fetch_add(1)) < chunks;) {
      const std::size_t count = std::min(kChunk, n_samples - c * kChunk);
      partial[c] = run_chunk(splitmix64(seed ^ splitmix64(c)), count, prefix_len);
    }
  };
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, chunks));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  pool.clear();

  MeasureResult out;
  out.samples = n_samples;
  out.prefix_len = prefix_len;
  out.seed = seed;
  for (const auto& h : partial) {
    for (std::size_t i = 0; i < h.size(); ++i) out.histogram[i] += h[i];
  }
  out.fraction_all_letters = static_cast<double>(out.histogram[8]) / static_cast<double>(n_samples);
  return out;
}

WordSpec random_word(std::uint64_t seed, std::size_t max_prefix, std::size_t max_cycle) {
  if (max_cycle == 0) throw std::invalid_argument("cycle length must be >= 1");
  std::mt19937_64 rng(splitmix64(seed));
  WordSpec w;
  w.root = static_cast<RootLetter>(rng() % 4);
  const std::size_t plen = rng() % (max_prefix + 1);
  const std::size_t clen = 1 + rng() % max_cycle;
  for (std::size_t i = 0; i < plen; ++i) w.prefix.emplace_back(static_cast<int>(rng() % 8));
  for (std::size_t i = 0; i < clen; ++i) w.cycle.emplace_back(static_cast<int>(rng() % 8));
  return w;
}

}  // namespace carpet
