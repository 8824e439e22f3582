#include "fxl/sampling.hpp"

#include <random>

namespace fxl {

namespace {

std::vector<Vec> tensor_grid(const Box& box, std::size_t max_points) {
  const std::size_t d = box.dimension();
  std::size_t per_axis = 2;
  for (std::size_t g = 2;; ++g) {
    std::size_t total = 1;
    bool overflow = false;
    for (std::size_t i = 0; i < d; ++i) {
      total *= g;
      if (total > max_points) {
        overflow = true;
        break;
      }
    }
    if (overflow) break;
    per_axis = g;
  }
  std::vector<Vec> points;
  std::vector<std::size_t> idx(d, 0);
  while (true) {
    Vec p(d);
    for (std::size_t i = 0; i < d; ++i) {
      double t = per_axis == 1 ? 0.5 : static_cast<double>(idx[i]) / (per_axis - 1);
      p[i] = box.lo[i] + t * (box.hi[i] - box.lo[i]);
    }
    points.push_back(std::move(p));
    std::size_t i = 0;
    for (; i < d; ++i) {
      if (++idx[i] < per_axis) break;
      idx[i] = 0;
    }
    if (i == d) break;
  }
  return points;
}

Vec random_point(const Box& box, std::mt19937_64& gen) {
  Vec p(box.dimension());
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::uniform_real_distribution<double> dist(box.lo[i], box.hi[i]);
    p[i] = dist(gen);
  }
  return p;
}

}  // namespace

std::vector<PointPair> sample_pairs(const Box& box, std::size_t count, std::uint64_t seed) {
  std::vector<PointPair> pairs;
  pairs.reserve(count);
  const std::vector<Vec> grid = tensor_grid(box, 32);
  for (std::size_t i = 0; i < grid.size() && pairs.size() < count; ++i)
    for (std::size_t j = 0; j < grid.size() && pairs.size() < count; ++j)
      if (i != j) pairs.push_back({grid[i], grid[j]});
  std::mt19937_64 gen(seed);
  while (pairs.size() < count) {
    Vec x = random_point(box, gen);
    Vec y = random_point(box, gen);
    pairs.push_back({std::move(x), std::move(y)});
  }
  return pairs;
}

std::vector<Vec> sample_points(const Box& box, std::size_t count, std::uint64_t seed) {
  std::vector<Vec> points = tensor_grid(box, 32);
  if (points.size() > count) points.resize(count);
  std::mt19937_64 gen(seed);
  while (points.size() < count) points.push_back(random_point(box, gen));
  return points;
}

}  // namespace fxl
