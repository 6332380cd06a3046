#include <algorithm>

#include "vspace/error.hpp"
#include "vspace/operator_table.hpp"

namespace vspace {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::MissingEntry: return "MissingEntry";
    case ErrorKind::DuplicateEntry: return "DuplicateEntry";
    case ErrorKind::GroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorKind::MalformedDocument: return "MalformedDocument";
    case ErrorKind::WrongKind: return "WrongKind";
    case ErrorKind::NotAViolatorSpace: return "NotAViolatorSpace";
    case ErrorKind::NotACoviolatorSpace: return "NotACoviolatorSpace";
    case ErrorKind::NotUniquelyGenerated: return "NotUniquelyGenerated";
    case ErrorKind::AxiomsNotSatisfied: return "AxiomsNotSatisfied";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::UnknownExample: return "UnknownExample";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxSize) {
    throw Error(ErrorKind::GroundSetTooLarge,
                std::to_string(labels_.size()) + " elements, at most " + std::to_string(kMaxSize));
  }
  for (unsigned i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(ErrorKind::InvalidArgument, "duplicate ground-set label '" + labels_[i] + "'");
    }
  }
}

GroundSet GroundSet::numbered(unsigned n) {
  std::vector<std::string> labels;
  for (unsigned i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

std::optional<unsigned> GroundSet::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SubsetMask GroundSet::encode(const std::vector<std::string>& labels) const {
  SubsetMask x;
  for (const auto& label : labels) {
    auto i = find(label);
    if (!i) throw Error(ErrorKind::UnknownLabel, "'" + label + "'");
    x = x.with(*i);
  }
  return x;
}

std::vector<std::string> GroundSet::decode(SubsetMask x) const {
  std::vector<std::string> out;
  for (unsigned i = 0; i < size(); ++i) {
    if (x.test(i)) out.push_back(labels_[i]);
  }
  return out;
}

std::string GroundSet::format(SubsetMask x) const {
  std::string out = "{";
  bool first = true;
  for (const auto& label : decode(x)) {
    if (!first) out += ",";
    out += label;
    first = false;
  }
  return out + "}";
}

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::phi: return "phi";
    case OperatorKind::nu: return "nu";
    case OperatorKind::choice: return "choice";
  }
  return "?";
}

OperatorKind parse_kind(std::string_view text) {
  if (text == "phi") return OperatorKind::phi;
  if (text == "nu") return OperatorKind::nu;
  if (text == "choice") return OperatorKind::choice;
  throw Error(ErrorKind::MalformedDocument, "unknown kind '" + std::string(text) + "'");
}

OperatorTable::OperatorTable(GroundSet ground, OperatorKind kind, std::vector<SubsetMask> map)
    : ground_(std::move(ground)), kind_(kind), map_(std::move(map)) {
  if (map_.size() != ground_.subset_count()) {
    throw Error(ErrorKind::MissingEntry, "table has " + std::to_string(map_.size()) +
                                             " entries, expected " +
                                             std::to_string(ground_.subset_count()));
  }
  for (auto y : map_) {
    if (!ground_.contains(y)) {
      throw Error(ErrorKind::InvalidArgument, "entry has bits outside the ground set");
    }
  }
}

OperatorTable OperatorTable::identity(GroundSet ground, OperatorKind kind) {
  std::vector<SubsetMask> map(ground.subset_count());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = SubsetMask(static_cast<std::uint32_t>(i));
  return OperatorTable(std::move(ground), kind, std::move(map));
}

void require_kind(const OperatorTable& t, std::initializer_list<OperatorKind> allowed,
                  std::string_view operation) {
  if (std::find(allowed.begin(), allowed.end(), t.kind()) != allowed.end()) return;
  throw Error(ErrorKind::WrongKind, std::string(operation) + " does not accept kind '" +
                                        std::string(to_string(t.kind())) + "'");
}

bool all_hold(std::span<const AxiomReport> reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.holds; });
}

const AxiomReport& find_report(std::span<const AxiomReport> reports, std::string_view axiom) {
  for (const auto& r : reports) {
    if (r.axiom == axiom) return r;
  }
  throw Error(ErrorKind::InvalidArgument, "no report for " + std::string(axiom));
}

void require_sweep_size(const OperatorTable& t, bool allow_large, std::string_view operation) {
  if (t.n() > kSweepCap && !allow_large) {
    throw Error(ErrorKind::GroundSetTooLarge,
                std::string(operation) + " sweeps all subsets per subset; n=" +
                    std::to_string(t.n()) + " exceeds " + std::to_string(kSweepCap) +
                    " (pass the large-input override to force)");
  }
}

}  // namespace vspace
