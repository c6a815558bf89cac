#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lensspec/heat.hpp"
#include "lensspec/lens_space.hpp"
#include "lensspec/search.hpp"
#include "lensspec/spectrum.hpp"

namespace lensspec {

/// Field order is part of the output format, so objects keep insertion order.
using Json = nlohmann::ordered_json;

inline constexpr std::string_view kVersion = "0.1.0";

enum class Format { Text, JsonLines, Csv };

/// "text", "json-lines" or "csv"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

/// 15 significant digits.
std::string decimal(double value);

Json to_json(const LensSpace& space);
LensSpace lens_space_from_json(const Json& j);

Json to_json(const IsometryWitness& witness);
IsometryWitness witness_from_json(const Json& j);

Json to_json(const SpectrumRow& row);
SpectrumRow spectrum_row_from_json(const Json& j);

Json to_json(const SingularDecomposition& d);
SingularDecomposition decomposition_from_json(const Json& j);

/// Exact parts as "num/den" strings, plus a decimal rendering.
Json to_json(const HeatTerm& term);
HeatTerm heat_term_from_json(const Json& j);

Json to_json(const StratumTerm& term);
StratumTerm stratum_term_from_json(const Json& j);

Json to_json(const HeatExpansion& expansion);
HeatExpansion heat_expansion_from_json(const Json& j);

Json to_json(const PairReport& report);
PairReport pair_report_from_json(const Json& j);

Json to_json(const QRecord& record);
QRecord q_record_from_json(const Json& j);

/// Totals only; per-q records and pairs are streamed separately. The wall
/// clock is included only when `with_timing` is set so that repeated runs
/// produce identical bytes.
Json to_json(const SweepSummary& summary, bool with_timing = false);
SweepSummary sweep_summary_from_json(const Json& j);

/// {"command", "version", "input", "result"} plus "timing_ms" when given.
Json envelope(std::string_view command, Json input, Json result, std::optional<double> timing_ms = std::nullopt);

}  // namespace lensspec
