#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "vspace/operator_table.hpp"

namespace vspace {

class CospanningPartition;

/// Operator-table document:
///   {"ground_set": [...], "kind": "phi"|"nu"|"choice",
///    "map": [{"x": [labels], "y": [labels]}, ...]}
/// Bit order follows `ground_set`; every subset must appear exactly once.
OperatorTable load_operator(const nlohmann::json& document);
nlohmann::json save_operator(const OperatorTable& table);

OperatorTable read_operator_file(const std::filesystem::path& path);
void write_operator_file(const OperatorTable& table, const std::filesystem::path& path);

/// Relation document: {"ground_set": [...], "classes": [[[labels], ...], ...]}.
CospanningPartition load_relation(const nlohmann::json& document);
nlohmann::json save_relation(const CospanningPartition& partition);

CospanningPartition read_relation_file(const std::filesystem::path& path);
void write_relation_file(const CospanningPartition& partition, const std::filesystem::path& path);

nlohmann::json subset_to_json(const GroundSet& ground, SubsetMask x);
SubsetMask subset_from_json(const GroundSet& ground, const nlohmann::json& labels);

/// JSON mirror of an AxiomReport: {"axiom", "holds", "witness": [[labels], ...]}.
nlohmann::json report_to_json(const GroundSet& ground, const AxiomReport& report);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const nlohmann::json& document, const std::filesystem::path& path);

}  // namespace vspace
