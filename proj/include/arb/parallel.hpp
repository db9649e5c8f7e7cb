#pragma once

#include <cstddef>
#include <cstdint>

namespace arb {

// Every parallel kernel in this project also has the serial path below it;
// tests hold the two to bit-identical outputs. Results are written to
// per-index slots and reduced in index order, so thread scheduling never
// changes a value.
enum class ExecPolicy { Serial, Parallel };

template <typename F>
void parallel_for(std::size_t count, ExecPolicy policy, F&& body) {
  if (policy == ExecPolicy::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      body(static_cast<std::size_t>(i));
    }
    return;
#endif
  }
  for (std::size_t i = 0; i < count; ++i) body(i);
}

}  // namespace arb
