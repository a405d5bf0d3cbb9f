#include "minkowski/norm_json.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace minkowski {

namespace {

double number_or_inf(const json& j) {
  if (j.is_string() && (j.get<std::string>() == "inf" || j.get<std::string>() == "infinity")) {
    return std::numeric_limits<double>::infinity();
  }
  return j.get<double>();
}

Vec2 vec2_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw NormSpecError("expected a 2D vector [x, y]");
  return Vec2(j[0].get<double>(), j[1].get<double>());
}

Norm parse(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw NormSpecError("norm spec needs a \"kind\" field");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "pnorm") {
    return Norm::pnorm(number_or_inf(j.at("p")), j.value("dim", 2));
  }
  if (kind == "euclidean") {
    return Norm::euclidean(j.value("dim", 2), j.value("lambda", 1.0));
  }
  if (kind == "hexagonal") return Norm::hexagonal();
  if (kind == "polygon") {
    std::vector<Vec2> vs;
    for (const auto& v : j.at("vertices")) vs.push_back(vec2_from_json(v));
    return Norm::polygon(std::move(vs));
  }
  if (kind == "lens") {
    if (!j.contains("center") && !j.contains("form")) return Norm::lens();
    const Vec2 c = vec2_from_json(j.at("center"));
    const auto& f = j.at("form");
    Eigen::Matrix2d form;
    form << f.at(0).at(0).get<double>(), f.at(0).at(1).get<double>(), f.at(1).at(0).get<double>(),
        f.at(1).at(1).get<double>();
    return Norm::lens(c, form);
  }
  if (kind == "revolution") return Norm::revolution(parse(j.at("profile")));
  if (kind == "radial") {
    return Norm::radial_harmonics(j.at("a0").get<double>(),
                                  j.value("cos", std::vector<double>{}),
                                  j.value("sin", std::vector<double>{}));
  }
  if (kind == "linear") {
    const auto& m = j.at("matrix");
    Eigen::MatrixXd matrix(static_cast<Eigen::Index>(m.size()),
                           static_cast<Eigen::Index>(m.at(0).size()));
    for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
      for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
        matrix(r, c) = m.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c)).get<double>();
      }
    }
    return Norm::linear(parse(j.at("base")), std::move(matrix));
  }
  throw NormSpecError("unknown norm kind \"" + kind + "\"");
}

}  // namespace

Norm norm_from_json(const json& j) {
  try {
    return parse(j);
  } catch (const json::exception& e) {
    throw NormSpecError(std::string("malformed norm spec: ") + e.what());
  }
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array() || j.size() < 2 || j.size() > 3) throw NormSpecError("expected a 2D or 3D vector");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  return v;
}

json norm_to_json(const Norm& norm) {
  const auto& payload = norm.spec().payload;
  if (const auto* s = std::get_if<spec::PNorm>(&payload)) {
    json p = std::isinf(s->p) ? json("inf") : json(s->p);
    return {{"kind", "pnorm"}, {"p", p}, {"dim", s->dim}};
  }
  if (const auto* s = std::get_if<spec::ScaledEuclidean>(&payload)) {
    return {{"kind", "euclidean"}, {"dim", s->dim}, {"lambda", s->lambda}};
  }
  if (std::holds_alternative<spec::Hexagonal>(payload)) return {{"kind", "hexagonal"}};
  if (const auto* s = std::get_if<spec::Polygon>(&payload)) {
    json vs = json::array();
    for (const auto& v : s->vertices) vs.push_back({v.x(), v.y()});
    return {{"kind", "polygon"}, {"vertices", vs}};
  }
  if (const auto* s = std::get_if<spec::Lens>(&payload)) {
    return {{"kind", "lens"},
            {"center", {s->center.x(), s->center.y()}},
            {"form", {{s->form(0, 0), s->form(0, 1)}, {s->form(1, 0), s->form(1, 1)}}}};
  }
  if (const auto* s = std::get_if<spec::Revolution>(&payload)) {
    return {{"kind", "revolution"}, {"profile", norm_to_json(s->profile)}};
  }
  if (const auto* s = std::get_if<spec::RadialGauge>(&payload)) {
    if (!s->harmonics_cos) {
      throw NormSpecError("radial gauge \"" + s->label + "\" has no serializable form");
    }
    return {{"kind", "radial"}, {"a0", s->harmonics_a0}, {"cos", *s->harmonics_cos},
            {"sin", *s->harmonics_sin}};
  }
  const auto& s = std::get<spec::Linear>(payload);
  json m = json::array();
  for (Eigen::Index r = 0; r < s.matrix.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < s.matrix.cols(); ++c) row.push_back(s.matrix(r, c));
    m.push_back(row);
  }
  return {{"kind", "linear"}, {"base", norm_to_json(s.base)}, {"matrix", m}};
}

Norm parse_norm_argument(const std::string& arg) {
  if (arg == "euclidean") return Norm::euclidean(2);
  if (arg == "euclidean3") return Norm::euclidean(3);
  if (arg == "hexagonal" || arg == "hexagon") return Norm::hexagonal();
  if (arg == "l1" || arg == "diamond") return Norm::diamond();
  if (arg == "linf" || arg == "square") return Norm::square();
  if (arg == "lens") return Norm::lens();
  if (arg == "revolution-hexagonal") return Norm::revolution(Norm::hexagonal());
  if (arg.rfind("p:", 0) == 0) {
    try {
      return Norm::pnorm(std::stod(arg.substr(2)), 2);
    } catch (const std::logic_error&) {
      throw NormSpecError("bad p-norm shorthand \"" + arg + "\"");
    }
  }
  if (!arg.empty() && arg.front() == '{') {
    try {
      return norm_from_json(json::parse(arg));
    } catch (const json::exception& e) {
      throw NormSpecError(std::string("malformed norm spec: ") + e.what());
    }
  }
  std::ifstream in(arg);
  if (!in) throw NormSpecError("cannot open norm spec \"" + arg + "\"");
  try {
    return norm_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw NormSpecError("malformed norm spec in \"" + arg + "\": " + e.what());
  }
}

}  // namespace minkowski
