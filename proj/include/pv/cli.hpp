#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pv/hopf.hpp"

namespace pv {

using Json = nlohmann::ordered_json;

struct Bounds {
  int degree = 8;
  int samples = 25;
  std::uint64_t seed = 0;
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

struct ConstantsExtension {
  std::string generator;
  std::string min_poly;
  friend bool operator==(const ConstantsExtension&, const ConstantsExtension&) = default;
};

struct SpecDocument {
  std::string name;
  SettingKind kind = SettingKind::Differential;
  std::vector<std::vector<std::string>> matrix;
  std::optional<std::vector<std::string>> ideal;
  std::optional<std::vector<std::string>> subring;
  std::optional<std::vector<std::string>> subhopf;
  Bounds bounds;
  std::optional<ConstantsExtension> constants_extension;
  // Degree used by the simplicity check; defaults to 3.
  std::optional<int> simplicity_degree;
  // Module that the subring trivializes, checked with pv_verify.
  std::optional<std::vector<std::vector<std::string>>> subring_module;

  std::size_t rank() const noexcept { return matrix.size(); }
  friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

// Validates structure and parses every polynomial string once; errors name the field.
SpecDocument parse_spec(const std::string& text);
SpecDocument spec_from_json(const Json& j);
Json spec_to_json(const SpecDocument& spec);
std::string serialize_spec(const SpecDocument& spec);

enum class Stage { Universal, Quotient, PV, Hopf, Group, Correspondence };
const std::vector<Stage>& all_stages();
std::string to_string(Stage s);
Stage parse_stage(const std::string& name);
// Comma-separated list.
std::vector<Stage> parse_stages(const std::string& list);
// The stages a spec supports: quotient needs an ideal, correspondence a subring.
std::vector<Stage> default_stages(const SpecDocument& spec);

struct PipelineOptions {
  bool timing = false;
};

struct Report {
  Json document;
  bool passed = false;
  std::string text() const;  // stable serialization
};

// Throws StageOrderError for stages the spec cannot support; otherwise always
// returns a report, with failures recorded per stage.
Report run_pipeline(const SpecDocument& spec, const std::vector<Stage>& stages, const PipelineOptions& options = {});

// Human-readable lines derived from a report document.
std::string summarize(const Json& report);

const std::vector<SpecDocument>& catalog();

}  // namespace pv
