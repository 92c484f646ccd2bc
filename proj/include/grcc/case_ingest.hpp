#pragma once

#include <filesystem>

#include "grcc/types.hpp"

namespace grcc {

// Parses a case in either the native structured format or a MATPOWER-style
// subset (auto-detected). Returns a validated PowerCase with every quantity
// per-unit on base_mva.
PowerCase parse_case(const std::string& text);

// Applies `wind` and `adj` directives from a config text to a case. Wind
// directives are only legal when the case itself carries no wind farms
// (MATPOWER files cannot express them).
PowerCase augment_case(const PowerCase& pc, const std::string& config_text);

// Parses a study config against an already-augmented case. Scalar risk
// entries broadcast to per-generator/per-line vectors; omitted keys take
// the documented defaults.
StudyConfig parse_config(const std::string& text, const PowerCase& pc);

void validate_case(const PowerCase& pc);
void validate_config(const StudyConfig& cfg, const PowerCase& pc);

std::string serialize_case(const PowerCase& pc);
std::string serialize_config(const StudyConfig& cfg);

struct Study {
  PowerCase pcase;
  StudyConfig config;
};

// Reads and merges case + optional config file into a ready-to-use study.
Study load_study(const std::filesystem::path& case_path,
                 const std::filesystem::path& config_path = {});

Study make_study(const std::string& case_text, const std::string& config_text);

}  // namespace grcc
