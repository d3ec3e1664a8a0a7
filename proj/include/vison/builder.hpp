#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vison/catalog.hpp"
#include "vison/consistency.hpp"
#include "vison/ontology.hpp"
#include "vison/schema.hpp"

namespace vison {

// Ids the builder relies on; the schema must declare all of them.
namespace ids {
inline constexpr std::string_view kTool = "tool";
inline constexpr std::string_view kBehaviorTool = "behavior-tool";
inline constexpr std::string_view kStructureTool = "structure-tool";
inline constexpr std::string_view kEvolutionTool = "evolution-tool";
inline constexpr std::string_view kCombinedTool = "combined-aspect-tool";
inline constexpr std::string_view kFramework = "framework";
inline constexpr std::string_view kEnvironment = "environment";
inline constexpr std::string_view kTechnique = "technique";
inline constexpr std::string_view kConcernKeyword = "concern-keyword";

inline constexpr std::string_view kAspectIs = "aspectis";
inline constexpr std::string_view kHasMedium = "hasmedium";
inline constexpr std::string_view kUsesTechnique = "usestechnique";
inline constexpr std::string_view kRunsIn = "runsin";
inline constexpr std::string_view kEvaluatedBy = "evaluatedby";
inline constexpr std::string_view kAddressesConcernKeyword = "addressesconcernkeyword";
inline constexpr std::string_view kHasDataSource = "hasdatasource";
inline constexpr std::string_view kHasLicense = "haslicense";
inline constexpr std::string_view kLastUpdate = "lastupdate";
inline constexpr std::string_view kDimensionality = "dimensionality";

inline constexpr std::string_view kRuntime = "runtime";
inline constexpr std::string_view kSourceCode = "source-code";
inline constexpr std::string_view kVersionHistory = "version-history";

inline constexpr std::string_view kUrlAnnotation = "url";
inline constexpr std::string_view kConcernAnnotation = "concern";
}  // namespace ids

std::string_view aspect_individual(Aspect aspect);
// Class a tool of this aspect is asserted into (combined tools go to the
// framework subclass of the combined-aspect class).
std::string_view aspect_class(Aspect aspect);
std::string_view medium_individual(Medium medium);
std::string_view evaluation_individual(Evaluation evaluation);
std::string_view license_individual(License license);
// Behavior -> runtime, Structure -> source code, Evolution -> version history,
// Combined -> all three.
std::vector<std::string_view> data_sources(Aspect aspect);

class BuildError : public std::runtime_error {
 public:
  BuildError(const std::string& message, ConsistencyReport report = {})
      : std::runtime_error(message), report_(std::move(report)) {}

  const ConsistencyReport& report() const noexcept { return report_; }

 private:
  ConsistencyReport report_;
};

// Precondition: validate_catalog reported no errors. One Tool individual per
// record, one facet individual per distinct facet value. Throws BuildError if
// the schema lacks a required id, a tool id collides with a schema individual,
// or the result is inconsistent.
Ontology build_ontology(const std::vector<ToolRecord>& records, const Schema& schema);

// Reconstructs tool records from a built ontology, in id order.
std::vector<ToolRecord> export_records(const Ontology& ontology);

}  // namespace vison
