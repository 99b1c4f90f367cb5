#include "idnc/random.hpp"

namespace idnc {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index,
                          std::uint64_t purpose) {
  std::uint64_t h = splitmix64(parent);
  h = splitmix64(h ^ (index * 0xd6e8feb86659fd93ULL));
  return splitmix64(h ^ (purpose * 0xa0761d6478bd642fULL));
}

}  // namespace idnc
