#include "fxl/mapping.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fxl/norm.hpp"

namespace fxl {

using nlohmann::json;

Mapping::Mapping(std::string label, Box domain, EvalFn fn, std::optional<Vec> known_fixed_point)
    : label_(std::move(label)),
      domain_(std::move(domain)),
      fn_(std::move(fn)),
      fixed_point_(std::move(known_fixed_point)) {
  if (!fn_) raise(ErrorCode::invalid_argument, "mapping requires an evaluation function");
  if (fixed_point_) {
    if (fixed_point_->size() != domain_.dimension())
      raise(ErrorCode::invalid_argument, label_ + ": fixed point dimension mismatch");
    if (!domain_.contains(*fixed_point_))
      raise(ErrorCode::invalid_argument, label_ + ": fixed point outside domain");
    Vec image = evaluate(*fixed_point_);
    double r = Norm::euclidean().distance(image, *fixed_point_);
    if (!(r <= 1e-12))
      raise(ErrorCode::invalid_argument,
            label_ + ": declared fixed point has residual above 1e-12");
  }
}

Vec Mapping::evaluate(std::span<const double> x) const {
  if (x.size() != domain_.dimension())
    raise(ErrorCode::invalid_argument, label_ + ": evaluation dimension mismatch");
  if (!domain_.contains(x))
    raise(ErrorCode::domain_escape, label_ + ": evaluation argument outside domain");
  Vec out = fn_(x);
  if (out.size() != domain_.dimension())
    raise(ErrorCode::invalid_argument, label_ + ": evaluation produced wrong dimension");
  if (!all_finite(out))
    raise(ErrorCode::non_finite_value, label_ + ": evaluation produced a non-finite value");
  if (!domain_.contains(out))
    raise(ErrorCode::domain_escape, label_ + ": image escapes the domain (not a self-map)");
  return out;
}

const Mapping* Corpus::find(std::string_view label) const noexcept {
  for (const auto& m : maps)
    if (m.label() == label) return &m;
  return nullptr;
}

const Mapping& Corpus::at(std::string_view label) const {
  const Mapping* m = find(label);
  if (!m) raise(ErrorCode::invalid_argument, "no map labeled '" + std::string(label) + "' in corpus");
  return *m;
}

Mapping make_affine_map(std::string label, Box domain, std::vector<Vec> matrix_rows, Vec offset,
                        std::optional<Vec> fixed_point) {
  const std::size_t d = domain.dimension();
  if (matrix_rows.size() != d || offset.size() != d)
    raise(ErrorCode::invalid_argument, label + ": affine parameters must be d x d plus d offset");
  for (const auto& row : matrix_rows)
    if (row.size() != d)
      raise(ErrorCode::invalid_argument, label + ": affine matrix row has wrong length");
  auto fn = [rows = std::move(matrix_rows), b = std::move(offset), d](std::span<const double> x) {
    Vec out(d);
    for (std::size_t i = 0; i < d; ++i) {
      double s = b[i];
      for (std::size_t j = 0; j < d; ++j) s += rows[i][j] * x[j];
      out[i] = s;
    }
    return out;
  };
  return Mapping(std::move(label), std::move(domain), std::move(fn), std::move(fixed_point));
}

Mapping make_scalar_formula_map(std::string label, Box domain, const std::string& formula,
                                double scale, std::optional<Vec> fixed_point) {
  if (domain.dimension() != 1)
    raise(ErrorCode::invalid_argument, label + ": scalar_formula maps are one-dimensional");
  Mapping::EvalFn fn;
  if (formula == "cosine") {
    fn = [scale](std::span<const double> x) { return Vec{scale * std::cos(x[0])}; };
  } else if (formula == "scaled_tanh") {
    fn = [scale](std::span<const double> x) { return Vec{scale * std::tanh(x[0])}; };
  } else {
    raise(ErrorCode::parse, label + ": unknown scalar formula '" + formula + "'");
  }
  return Mapping(std::move(label), std::move(domain), std::move(fn), std::move(fixed_point));
}

Mapping make_piecewise_map(std::string label, Box domain, Vec knots, Vec values,
                           std::optional<Vec> fixed_point) {
  if (domain.dimension() != 1)
    raise(ErrorCode::invalid_argument, label + ": piecewise maps are one-dimensional");
  if (knots.size() != values.size() || knots.size() < 2)
    raise(ErrorCode::invalid_argument, label + ": piecewise needs >= 2 matching knots/values");
  for (std::size_t i = 1; i < knots.size(); ++i)
    if (!(knots[i] > knots[i - 1]))
      raise(ErrorCode::invalid_argument, label + ": piecewise knots must be strictly increasing");
  if (knots.front() > domain.lo[0] || knots.back() < domain.hi[0])
    raise(ErrorCode::invalid_argument, label + ": piecewise knots must cover the domain");
  auto fn = [k = std::move(knots), v = std::move(values)](std::span<const double> x) {
    auto it = std::upper_bound(k.begin(), k.end(), x[0]);
    std::size_t j = it == k.end() ? k.size() - 1 : static_cast<std::size_t>(it - k.begin());
    if (j == 0) j = 1;
    double t = (x[0] - k[j - 1]) / (k[j] - k[j - 1]);
    return Vec{v[j - 1] + t * (v[j] - v[j - 1])};
  };
  return Mapping(std::move(label), std::move(domain), std::move(fn), std::move(fixed_point));
}

namespace {

Vec json_vec(const json& j, const std::string& what) {
  if (!j.is_array()) raise(ErrorCode::parse, what + " must be an array of numbers");
  Vec out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) raise(ErrorCode::parse, what + " must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

Mapping parse_entry(const json& e) {
  if (!e.is_object()) raise(ErrorCode::parse, "corpus entry must be an object");
  for (const char* key : {"label", "dimension", "domain", "kind", "parameters"})
    if (!e.contains(key)) raise(ErrorCode::parse, std::string("corpus entry missing '") + key + "'");

  std::string label = e.at("label").get<std::string>();
  auto dimension = e.at("dimension").get<std::size_t>();
  Box domain(json_vec(e.at("domain").at("lo"), label + ".domain.lo"),
             json_vec(e.at("domain").at("hi"), label + ".domain.hi"));
  if (domain.dimension() != dimension)
    raise(ErrorCode::parse, label + ": dimension does not match domain bounds");

  std::optional<Vec> fp;
  if (e.contains("known_fixed_point") && !e.at("known_fixed_point").is_null())
    fp = json_vec(e.at("known_fixed_point"), label + ".known_fixed_point");

  const std::string kind = e.at("kind").get<std::string>();
  const json& params = e.at("parameters");
  if (kind == "affine") {
    std::vector<Vec> rows;
    for (const auto& row : params.at("matrix")) rows.push_back(json_vec(row, label + ".matrix"));
    return make_affine_map(label, std::move(domain), std::move(rows),
                           json_vec(params.at("offset"), label + ".offset"), std::move(fp));
  }
  if (kind == "scalar_formula") {
    double scale = params.contains("scale") ? params.at("scale").get<double>() : 1.0;
    return make_scalar_formula_map(label, std::move(domain),
                                   params.at("formula").get<std::string>(), scale, std::move(fp));
  }
  if (kind == "piecewise") {
    return make_piecewise_map(label, std::move(domain), json_vec(params.at("knots"), label + ".knots"),
                              json_vec(params.at("values"), label + ".values"), std::move(fp));
  }
  raise(ErrorCode::parse, label + ": unknown map kind '" + kind + "'");
}

}  // namespace

Corpus parse_corpus(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& ex) {
    raise(ErrorCode::parse, std::string("corpus JSON parse failure: ") + ex.what());
  }
  if (!doc.is_array()) raise(ErrorCode::parse, "corpus document must be a JSON array");
  Corpus corpus;
  try {
    for (const auto& entry : doc) corpus.maps.push_back(parse_entry(entry));
  } catch (const json::exception& ex) {
    raise(ErrorCode::parse, std::string("corpus entry malformed: ") + ex.what());
  }
  for (std::size_t i = 0; i < corpus.maps.size(); ++i)
    for (std::size_t j = i + 1; j < corpus.maps.size(); ++j)
      if (corpus.maps[i].label() == corpus.maps[j].label())
        raise(ErrorCode::parse, "duplicate corpus label '" + corpus.maps[i].label() + "'");
  return corpus;
}

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::io, "cannot open corpus file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

}  // namespace fxl
