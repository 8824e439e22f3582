#pragma once

#include <cstdint>

#include "fxl/box.hpp"

namespace fxl {

struct PointPair {
  Vec x;
  Vec y;
};

/// Deterministic sample-pair generator for condition checks: all ordered
/// pairs of a small tensor grid first, then seeded uniform pairs until
/// `count` pairs exist. Same (box, count, seed) always yields the same set.
std::vector<PointPair> sample_pairs(const Box& box, std::size_t count, std::uint64_t seed);

/// Deterministic candidate points: grid plus seeded uniform fill.
std::vector<Vec> sample_points(const Box& box, std::size_t count, std::uint64_t seed);

}  // namespace fxl
