// File formats: JSON inputs (distributions, events, graphs, parametric
// families), JSON reports, and CSV outputs for sweeps and walk trajectories.
// Parse failures throw ParseError naming the offending field; values that
// parse but violate a domain invariant throw ValidationError.
//
// Non-finite measure values are serialized as the strings "+inf", "-inf",
// and "undefined" in both JSON and CSV, never as IEEE specials.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "actinfo/distribution.hpp"
#include "actinfo/ext_real.hpp"
#include "actinfo/finetune.hpp"
#include "actinfo/markov.hpp"
#include "actinfo/measures.hpp"
#include "actinfo/regimes.hpp"
#include "actinfo/sweep.hpp"

namespace actinfo {

// Shortest-exact decimal for a double ("%.17g"); round-trips bit-exactly.
std::string format_double(double v);

// "+inf" / "-inf" / "undefined" / formatted number.
std::string format_ext_real(ExtReal v);

nlohmann::ordered_json ext_real_json(ExtReal v);

// --- input files ---------------------------------------------------------

// {"labels": [...], "probs": [...]}; labels may be strings or integers.
FiniteDistribution load_distribution(const std::filesystem::path& path);

// {"indices": [...]}, validated against the given space size.
Event load_event(const std::filesystem::path& path, std::size_t space_size);

// {"n": int, "edges": [[u, v], ...]}
RegularGraph load_graph(const std::filesystem::path& path);

// {"kind": "truncated_normal" | "uniform_window", "domain": [0, L],
//  "h": real, "grid": [[a, b], ...]}
ParamFamily load_family(const std::filesystem::path& path);

// --- reports -------------------------------------------------------------

nlohmann::ordered_json measure_report_json(const MeasureReport& report);
nlohmann::ordered_json regime_report_json(const RegimeReport& report);
nlohmann::ordered_json tuning_result_json(const TuningResult& result);

// --- CSV -----------------------------------------------------------------

void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& rows);
void write_surface_csv(std::ostream& out, const std::vector<SurfacePoint>& rows);

// Header: t,q_t,active_info,cai_coarsened,regime. The regime column is
// empty when the start probability admits no classification.
void write_trajectory_csv(std::ostream& out, const std::vector<TrajectoryPoint>& rows);

}  // namespace actinfo
