#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gkz/gkz.hpp"

namespace gkz {

struct JobOptions {
  bool expand = false;
  int digits = 15;
  bool zeta = false;
  bool force = false;
  std::string format = "text";  // "text" or "json"
  bool check = false;
};

struct JobSpec {
  std::vector<IntVec> points;
  std::vector<GaussRat> gamma;
  std::optional<int> j0;  // empty means every 1..m
  JobOptions options;
};

// Input schema: {"points": [[..], ..], "gamma": ["p/q" | {"re","im"}, ..],
// "j0": k | "all"}. Rationals travel as strings; floats are rejected.
JobSpec parse_job(const nlohmann::json& input);

struct JobResult {
  int j0 = 0;
  FactoredCharPoly poly;
};

struct JobReport {
  int exit_code = 0;  // 0 ok, 2 resonant without force
  Int rank;
  ResonanceReport resonance;
  std::vector<JobResult> results;
};

// Runs the pipeline. Validation problems throw Error (CLI exit 1);
// a resonant parameter without force yields exit_code 2 with the
// violations filled in and no results.
JobReport run_job(const JobSpec& spec);

std::string render_text(const JobReport& report, const JobSpec& spec);
nlohmann::ordered_json render_json(const JobReport& report,
                                   const JobSpec& spec);

// Reads one entry of report["results"] back into canonical form.
FactoredCharPoly factored_from_json(const nlohmann::json& result);

}  // namespace gkz
