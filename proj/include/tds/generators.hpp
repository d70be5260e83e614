#pragma once
#include <cstdint>

#include "tds/geometry.hpp"

namespace tds {

// SplitMix64. Fixed by name so any implementation can reproduce streams;
// unit doubles are (next() >> 11) * 2^-53.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

enum class MinDegreePolicy { reject_isolated, allow };

struct GenSpec {
  int n = 0;
  double width = 1.0;
  double height = 1.0;
  std::uint64_t seed = 0;
  MinDegreePolicy policy = MinDegreePolicy::reject_isolated;
};

// n i.i.d. uniform points in the box, drawn x then y per point from one
// SplitMix64 stream. Under reject_isolated, isolated points are redrawn
// (in id order, continuing the stream) until none remain; a bounded
// number of rounds guards against boxes too sparse to ever connect.
PointSet gen_uniform(const GenSpec& spec);

// Collinear points at x = 0, spacing, 2*spacing, ...; y = 0.
PointSet gen_path(int n, double spacing);

}  // namespace tds
