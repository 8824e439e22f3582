#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "fxl/box.hpp"

namespace fxl {

/// A self-map T on a closed box domain E. Every evaluation checks both the
/// argument and the image against E; an escape is a hard error, never a clamp.
class Mapping {
 public:
  using EvalFn = std::function<Vec(std::span<const double>)>;

  Mapping(std::string label, Box domain, EvalFn fn,
          std::optional<Vec> known_fixed_point = std::nullopt);

  const std::string& label() const noexcept { return label_; }
  const Box& domain() const noexcept { return domain_; }
  std::size_t dimension() const noexcept { return domain_.dimension(); }
  const std::optional<Vec>& known_fixed_point() const noexcept { return fixed_point_; }

  Vec evaluate(std::span<const double> x) const;

 private:
  std::string label_;
  Box domain_;
  EvalFn fn_;
  std::optional<Vec> fixed_point_;
};

struct Corpus {
  std::vector<Mapping> maps;

  const Mapping* find(std::string_view label) const noexcept;
  const Mapping& at(std::string_view label) const;  // throws invalid_argument
};

/// Corpus file: a JSON array of entries {label, dimension, domain{lo, hi},
/// kind in {affine, scalar_formula, piecewise}, parameters, known_fixed_point?}.
Corpus load_corpus(const std::string& path);
Corpus parse_corpus(const std::string& json_text);

// Factories shared by the corpus loader and tests.
Mapping make_affine_map(std::string label, Box domain,
                        std::vector<Vec> matrix_rows, Vec offset,
                        std::optional<Vec> fixed_point = std::nullopt);
Mapping make_scalar_formula_map(std::string label, Box domain,
                                const std::string& formula, double scale,
                                std::optional<Vec> fixed_point = std::nullopt);
Mapping make_piecewise_map(std::string label, Box domain, Vec knots, Vec values,
                           std::optional<Vec> fixed_point = std::nullopt);

}  // namespace fxl
