// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CGEOM_BITSET_HPP
#define CGEOM_BITSET_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cgeom {

/// Subset of a dense index range 0..n-1.
using Bitset = boost::dynamic_bitset<std::uint64_t>;

inline Bitset make_bitset(std::size_t n, std::initializer_list<std::size_t> members) {
  Bitset b(n);
  for (std::size_t m : members) b.set(m);
  return b;
}

inline Bitset full_bitset(std::size_t n) {
  Bitset b(n);
  b.set();
  return b;
}

/// Calls f(i) for every set bit, ascending.
template <typename F>
void for_each_bit(const Bitset& b, F&& f) {
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) f(i);
}

inline std::vector<std::size_t> members(const Bitset& b) {
  std::vector<std::size_t> out;
  out.reserve(b.count());
  for_each_bit(b, [&](std::size_t i) { out.push_back(i); });
  return out;
}

/// Orders subsets by cardinality, then lexicographically by their sorted members.
inline bool cardinality_less(const Bitset& a, const Bitset& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != Bitset::npos && j != Bitset::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return false;
}

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept {
    std::size_t h = b.size() * 0x9e3779b97f4a7c15ULL;
    for_each_bit(b, [&](std::size_t i) { h ^= (i + 0x9e3779b97f4a7c15ULL) + (h << 6) + (h >> 2); });
    return h;
  }
};

}  // namespace cgeom

#endif  // CGEOM_BITSET_HPP
