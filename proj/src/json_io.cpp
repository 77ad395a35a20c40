#include "deligne/json_io.hpp"

#include <cstdint>
#include <limits>

namespace deligne {

using nlohmann::json;

namespace {

std::int64_t to_int64(const Int& v) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max()) {
    throw Error("integer exceeds the 64-bit JSON range");
  }
  return static_cast<std::int64_t>(v.get_si());
}

json vec_to_json(const IVec& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(to_int64(v[i]));
  return out;
}

IVec vec_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) {
    throw Error(std::string(what) + " must be a nonempty array");
  }
  IVec v(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) {
      throw Error(std::string(what) + " entries must be integers");
    }
    v[static_cast<int>(i)] = Int(j[i].get<std::int64_t>());
  }
  return v;
}

}  // namespace

json arrangement_to_json(const Arrangement& arr) {
  json hps = json::array();
  for (const auto& h : arr.hyperplanes()) hps.push_back(vec_to_json(h.normal));
  return json{{"dim", arr.dim()}, {"hyperplanes", hps}};
}

Arrangement arrangement_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("hyperplanes")) {
    throw Error("arrangement JSON needs \"dim\" and \"hyperplanes\"");
  }
  if (!j["dim"].is_number_integer()) throw Error("\"dim\" must be an integer");
  int dim = j["dim"].get<int>();
  if (!j["hyperplanes"].is_array()) throw Error("\"hyperplanes\" must be an array");
  std::vector<IVec> normals;
  for (const auto& row : j["hyperplanes"]) {
    normals.push_back(vec_from_json(row, "hyperplane"));
  }
  return Arrangement(dim, normals);
}

namespace {

json chamber_json(const Chamber& c, const std::vector<IVec>* rays) {
  json out{{"id", c.id}, {"sign", c.sign.to_string()}};
  if (rays) {
    json jr = json::array();
    for (const auto& r : *rays) jr.push_back(vec_to_json(r));
    out["rays"] = jr;
  }
  return out;
}

}  // namespace

json chamber_to_json(const Arrangement& arr, const Chamber& c) {
  const std::vector<IVec>* rays = nullptr;
  if (is_simplicial(arr) && arr.essential()) rays = &chamber_rays(arr, c);
  return chamber_json(c, rays);
}

json chamber_to_json(const SkeletonGraph& sk, const Chamber& c) {
  return chamber_json(c, &sk.labeled_rays(c.id));
}

json skeleton_to_json(const SkeletonGraph& sk) {
  json arrows = json::array();
  for (const auto& a : sk.arrows()) {
    arrows.push_back(json{{"src", a.source},
                          {"dst", a.target},
                          {"wall", a.wall},
                          {"label", a.label}});
  }
  json chambers = json::array();
  for (const auto& c : sk.arrangement().chambers().chambers) {
    chambers.push_back(chamber_to_json(sk, c));
  }
  return json{{"base", sk.base()}, {"arrows", arrows}, {"chambers", chambers}};
}

json gmatrix_to_json(const GMatrix& g) {
  json rows = json::array();
  for (int i = 0; i < g.rows.rows(); ++i) {
    rows.push_back(vec_to_json(g.rows.row(i).transpose()));
  }
  return json{{"base", g.base}, {"chamber", g.chamber}, {"rows", rows}};
}

std::pair<int, std::vector<IMat>> matrices_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("matrices")) {
    throw Error("reconstruction JSON needs \"dim\" and \"matrices\"");
  }
  if (!j["dim"].is_number_integer()) throw Error("\"dim\" must be an integer");
  int dim = j["dim"].get<int>();
  if (dim < 1) throw Error("\"dim\" must be positive");
  if (!j["matrices"].is_array() || j["matrices"].empty()) {
    throw Error("\"matrices\" must be a nonempty array");
  }
  std::vector<IMat> out;
  for (const auto& jm : j["matrices"]) {
    if (!jm.is_array() || jm.empty()) throw Error("matrix must be a nonempty array");
    std::vector<IVec> rows;
    for (const auto& row : jm) rows.push_back(vec_from_json(row, "matrix row"));
    for (const auto& r : rows) {
      if (r.size() != rows.front().size()) throw Error("ragged matrix rows");
    }
    IMat m(rows.size(), rows.front().size());
    for (size_t i = 0; i < rows.size(); ++i) m.row(static_cast<int>(i)) = rows[i].transpose();
    out.push_back(std::move(m));
  }
  return {dim, std::move(out)};
}

}  // namespace deligne
