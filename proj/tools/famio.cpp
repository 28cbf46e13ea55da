#include "famio.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "framekit/errors.hpp"

namespace framekit::io {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw InputError(origin + ": " + what);
}

double finite_number(const json& j, const std::string& origin, const std::string& what) {
  if (!j.is_number()) fail(origin, what + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail(origin, what + " is not finite");
  return x;
}

WeightedFamily parse_family(const json& doc, const std::string& origin) {
  if (!doc.is_object()) fail(origin, "top level must be an object");
  if (!doc.contains("field") || !doc["field"].is_string())
    fail(origin, "missing string field \"field\"");
  const std::string field_tag = doc["field"].get<std::string>();
  if (field_tag != "R" && field_tag != "C")
    fail(origin, "\"field\" must be \"R\" or \"C\"");
  const Field field = field_tag == "C" ? Field::Complex : Field::Real;

  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
    fail(origin, "\"n\" must be a positive integer");
  const std::size_t n = doc["n"].get<std::size_t>();

  if (!doc.contains("points") || !doc["points"].is_array())
    fail(origin, "missing array field \"points\"");

  std::vector<WeightedPoint> pts;
  pts.reserve(doc["points"].size());
  std::size_t index = 0;
  for (const json& jp : doc["points"]) {
    const std::string where = origin + ": point " + std::to_string(index);
    if (!jp.is_object()) fail(where, "must be an object");
    if (!jp.contains("weight")) fail(where, "missing \"weight\"");
    if (!jp.contains("value") || !jp["value"].is_array()) fail(where, "missing array \"value\"");
    WeightedPoint p;
    p.weight = finite_number(jp["weight"], where, "\"weight\"");
    if (p.weight < 0.0) fail(where, "\"weight\" is negative");
    if (jp["value"].size() != n)
      fail(where, "\"value\" has " + std::to_string(jp["value"].size()) + " entries, expected " +
                      std::to_string(n));
    p.value.reserve(n);
    for (const json& je : jp["value"]) {
      if (field == Field::Real) {
        p.value.emplace_back(finite_number(je, where, "entry"), 0.0);
      } else {
        if (!je.is_array() || je.size() != 2)
          fail(where, "complex entry must be a [re, im] pair");
        p.value.emplace_back(finite_number(je[0], where, "re"),
                             finite_number(je[1], where, "im"));
      }
    }
    pts.push_back(std::move(p));
    ++index;
  }

  FamilyMeta meta;
  if (doc.contains("meta")) {
    const json& jm = doc["meta"];
    if (!jm.is_object()) fail(origin, "\"meta\" must be an object");
    if (jm.contains("label")) {
      if (!jm["label"].is_string()) fail(origin, "\"meta.label\" must be a string");
      meta.label = jm["label"].get<std::string>();
    }
    if (jm.contains("tail_bound")) {
      meta.tail_bound = finite_number(jm["tail_bound"], origin, "\"meta.tail_bound\"");
      if (meta.tail_bound < 0.0) fail(origin, "\"meta.tail_bound\" is negative");
    }
  }

  try {
    return WeightedFamily(field, n, std::move(pts), std::move(meta));
  } catch (const InputError& e) {
    fail(origin, e.what());
  }
}

json family_to_json(const WeightedFamily& fam) {
  json doc;
  doc["field"] = fam.field() == Field::Complex ? "C" : "R";
  doc["n"] = fam.dim();
  json points = json::array();
  for (const WeightedPoint& p : fam.points()) {
    json value = json::array();
    for (const Scalar& z : p.value) {
      if (fam.field() == Field::Complex)
        value.push_back(json::array({z.real(), z.imag()}));
      else
        value.push_back(z.real());
    }
    points.push_back(json{{"weight", p.weight}, {"value", std::move(value)}});
  }
  doc["points"] = std::move(points);
  doc["meta"] = json{{"label", fam.meta().label}, {"tail_bound", fam.meta().tail_bound}};
  return doc;
}

}  // namespace

WeightedFamily read_family(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return family_from_json_text(buffer.str(), path.string());
}

void write_family(const WeightedFamily& fam, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError(path.string() + ": cannot write");
  out << family_to_json_text(fam) << '\n';
  if (!out) throw InputError(path.string() + ": write failed");
}

std::string family_to_json_text(const WeightedFamily& fam) {
  return family_to_json(fam).dump(1);
}

WeightedFamily family_from_json_text(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    // parse_error for syntax, out_of_range for numbers like 1e999.
    throw InputError(origin + ": malformed JSON: " + e.what());
  }
  return parse_family(doc, origin);
}

}  // namespace framekit::io
