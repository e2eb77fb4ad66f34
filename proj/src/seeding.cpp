#include "hypex/seeding.hpp"

namespace hypex {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::string_view stage) noexcept {
  std::uint64_t h = splitmix64(base);
  for (unsigned char c : stage) h = splitmix64(h ^ c);
  return h;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(base) ^ splitmix64(index + 0x51ed270b27f2a4d1ULL));
}

}  // namespace hypex
