#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "resdecomp/decompose.hpp"
#include "resdecomp/graph.hpp"
#include "resdecomp/sweep.hpp"

namespace resdecomp {

/// Version of the JSON report layout, emitted as the top-level "schema".
inline constexpr int kReportSchema = 1;

/// Rounds to `digits` significant digits so the JSON text stays stable.
double round_significant(double x, int digits = 12);

/// Finite values as rounded numbers; infinities and NaN as strings.
nlohmann::json json_number(double x);

/// {"n", "m", "total_weight", "min_weight", "max_weight"}
nlohmann::json graph_digest(const WeightedGraph& g);

nlohmann::json to_json(const CutResult& cut);
nlohmann::json to_json(const DecompositionResult& result, const WeightedGraph& g);
nlohmann::json to_json(const VerificationRecord& record);

/// Partition file: {"blocks": [[ids...], ...]}. A decompose report, which
/// carries the blocks under "result", is accepted as well.
std::vector<std::vector<Vertex>> read_partition(const std::filesystem::path& path);
std::vector<std::vector<Vertex>> parse_partition(const nlohmann::json& doc);
void write_partition(const std::filesystem::path& path, const Partition& partition);

}  // namespace resdecomp
