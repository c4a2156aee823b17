#include "fairmatch/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fairmatch {

namespace {

using Json = nlohmann::ordered_json;

Json parse_object(const std::string& text, const std::set<std::string>& allowed) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("top-level JSON must be an object");
  for (const auto& item : doc.items()) {
    if (!allowed.count(item.key())) {
      throw std::invalid_argument("unknown key: " + item.key());
    }
  }
  return doc;
}

int require_int(const Json& doc, const std::string& key) {
  if (!doc.contains(key)) throw std::invalid_argument("missing key: " + key);
  if (!doc[key].is_number_integer()) {
    throw std::invalid_argument("key must be an integer: " + key);
  }
  return doc[key].get<int>();
}

}  // namespace

Instance instance_from_json(const std::string& text) {
  Json doc = parse_object(text, {"num_colors", "left_colors", "k", "edges", "ell",
                                 "measure", "size_min", "size_max"});
  Instance inst;
  inst.num_colors = require_int(doc, "num_colors");
  inst.k = require_int(doc, "k");
  inst.ell = require_int(doc, "ell");

  if (!doc.contains("left_colors") || !doc["left_colors"].is_array()) {
    throw std::invalid_argument("left_colors must be an array");
  }
  for (const auto& c : doc["left_colors"]) {
    if (!c.is_number_integer()) throw std::invalid_argument("left_colors entries must be integers");
    inst.left_colors.push_back(c.get<int>());
  }

  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw std::invalid_argument("edges must be an array");
  }
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw std::invalid_argument("edges entries must be [left, right] pairs");
    }
    inst.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }

  if (!doc.contains("measure") || !doc["measure"].is_string()) {
    throw std::invalid_argument("measure must be \"mov\" or \"maxmin\"");
  }
  std::string measure = doc["measure"].get<std::string>();
  if (measure == "mov") {
    inst.measure = Measure::kMov;
  } else if (measure == "maxmin") {
    inst.measure = Measure::kMaxMin;
  } else {
    throw std::invalid_argument("measure must be \"mov\" or \"maxmin\"");
  }

  if (doc.contains("size_min")) inst.size_min = require_int(doc, "size_min");
  if (doc.contains("size_max") && !doc["size_max"].is_null()) {
    inst.size_max = require_int(doc, "size_max");
  }

  inst.finalize();
  return inst;
}

std::string instance_to_json(const Instance& inst) {
  Json doc;
  doc["num_colors"] = inst.num_colors;
  doc["left_colors"] = inst.left_colors;
  doc["k"] = inst.k;
  Json edges = Json::array();
  for (const auto& [u, v] : inst.edges) edges.push_back(Json::array({u, v}));
  doc["edges"] = std::move(edges);
  doc["ell"] = inst.ell;
  doc["measure"] = to_string(inst.measure);
  doc["size_min"] = inst.size_min;
  if (inst.size_max) {
    doc["size_max"] = *inst.size_max;
  } else {
    doc["size_max"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

Matching matching_from_json(const std::string& text) {
  Json doc = parse_object(text, {"assign"});
  if (!doc.contains("assign") || !doc["assign"].is_array()) {
    throw std::invalid_argument("assign must be an array");
  }
  Matching m;
  for (const auto& v : doc["assign"]) {
    if (!v.is_number_integer()) throw std::invalid_argument("assign entries must be integers");
    m.assign.push_back(v.get<int>());
  }
  return m;
}

std::string matching_to_json(const Matching& m) {
  Json doc;
  doc["assign"] = m.assign;
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

}  // namespace fairmatch
