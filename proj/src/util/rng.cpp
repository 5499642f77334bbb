#include "riesz/util/rng.hpp"

namespace riesz {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Rng Rng::stream(std::uint64_t seed, std::string_view name) { return Rng(splitmix64(seed ^ fnv1a(name))); }

long Rng::uniform(long lo, long hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long>(next());
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return lo + static_cast<long>(v % span);
}

num::Rational Rng::rational(long num_max, long den_max) {
  return num::Rational(uniform(-num_max, num_max), uniform(1, den_max));
}

num::Rational Rng::nonneg_rational(long num_max, long den_max) {
  return num::Rational(uniform(0, num_max), uniform(1, den_max));
}

}  // namespace riesz
