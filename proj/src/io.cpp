#include "vspace/io.hpp"

#include <fstream>
#include <optional>

#include "vspace/cospanning.hpp"
#include "vspace/error.hpp"

namespace vspace {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw Error(ErrorKind::MalformedDocument, std::string("missing field '") + name + "'");
  }
  return doc.at(name);
}

std::vector<std::string> label_list(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::MalformedDocument, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) {
      throw Error(ErrorKind::MalformedDocument, std::string(what) + " must contain strings");
    }
    out.push_back(e.get<std::string>());
  }
  return out;
}

GroundSet ground_from(const json& doc) {
  return GroundSet(label_list(field(doc, "ground_set"), "ground_set"));
}

}  // namespace

json subset_to_json(const GroundSet& ground, SubsetMask x) { return ground.decode(x); }

SubsetMask subset_from_json(const GroundSet& ground, const json& labels) {
  return ground.encode(label_list(labels, "subset"));
}

OperatorTable load_operator(const json& document) {
  GroundSet ground = ground_from(document);
  const auto& kind_field = field(document, "kind");
  if (!kind_field.is_string()) throw Error(ErrorKind::MalformedDocument, "kind must be a string");
  const OperatorKind kind = parse_kind(kind_field.get<std::string>());

  const auto& entries = field(document, "map");
  if (!entries.is_array()) throw Error(ErrorKind::MalformedDocument, "map must be an array");

  std::vector<std::optional<SubsetMask>> slots(ground.subset_count());
  for (const auto& entry : entries) {
    const SubsetMask x = subset_from_json(ground, field(entry, "x"));
    const SubsetMask y = subset_from_json(ground, field(entry, "y"));
    auto& slot = slots[x.index()];
    if (slot) throw Error(ErrorKind::DuplicateEntry, ground.format(x));
    slot = y;
  }

  std::vector<SubsetMask> map;
  map.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) {
      throw Error(ErrorKind::MissingEntry, ground.format(SubsetMask(static_cast<std::uint32_t>(i))));
    }
    map.push_back(*slots[i]);
  }
  return OperatorTable(std::move(ground), kind, std::move(map));
}

json save_operator(const OperatorTable& table) {
  const auto& ground = table.ground();
  json entries = json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const SubsetMask x(static_cast<std::uint32_t>(i));
    entries.push_back({{"x", subset_to_json(ground, x)}, {"y", subset_to_json(ground, table(x))}});
  }
  return {{"ground_set", ground.labels()},
          {"kind", std::string(to_string(table.kind()))},
          {"map", std::move(entries)}};
}

CospanningPartition load_relation(const json& document) {
  GroundSet ground = ground_from(document);
  const auto& classes_field = field(document, "classes");
  if (!classes_field.is_array()) throw Error(ErrorKind::MalformedDocument, "classes must be an array");
  std::vector<std::vector<SubsetMask>> classes;
  for (const auto& cls : classes_field) {
    if (!cls.is_array()) throw Error(ErrorKind::MalformedDocument, "each class must be an array");
    auto& members = classes.emplace_back();
    for (const auto& subset : cls) members.push_back(subset_from_json(ground, subset));
  }
  return CospanningPartition(std::move(ground), std::move(classes));
}

json save_relation(const CospanningPartition& partition) {
  const auto& ground = partition.ground();
  json classes = json::array();
  for (const auto& cls : partition.classes()) {
    json members = json::array();
    for (auto x : cls) members.push_back(subset_to_json(ground, x));
    classes.push_back(std::move(members));
  }
  return {{"ground_set", ground.labels()}, {"classes", std::move(classes)}};
}

json report_to_json(const GroundSet& ground, const AxiomReport& report) {
  json witness = json::array();
  for (auto x : report.witness) witness.push_back(subset_to_json(ground, x));
  return {{"axiom", report.axiom}, {"holds", report.holds}, {"witness", std::move(witness)}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::MalformedDocument, path.string() + ": " + e.what());
  }
}

void write_json_file(const json& document, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << document.dump(2) << '\n';
}

OperatorTable read_operator_file(const std::filesystem::path& path) {
  return load_operator(read_json_file(path));
}

void write_operator_file(const OperatorTable& table, const std::filesystem::path& path) {
  write_json_file(save_operator(table), path);
}

CospanningPartition read_relation_file(const std::filesystem::path& path) {
  return load_relation(read_json_file(path));
}

void write_relation_file(const CospanningPartition& partition, const std::filesystem::path& path) {
  write_json_file(save_relation(partition), path);
}

}  // namespace vspace
