#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace quadcontract {

// FNV-1a, 64 bit. Stable across runs and platforms; used for short code
// hashes in catalog indexes and reports.
inline std::uint64_t fnv1a64(const std::uint8_t* data, std::size_t len) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= data[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_hex(const std::uint8_t* data, std::size_t len);
std::string to_hex_u64(std::uint64_t value);

int default_thread_count();

// Runs fn(i) for every i in [0, count). Work is split statically over
// `threads` workers (0 = hardware concurrency), so results written by index
// do not depend on the thread count. Exceptions from workers are rethrown.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace quadcontract
