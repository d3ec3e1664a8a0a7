#include "vison/builder.hpp"

#include <map>

#include "vison/query.hpp"
#include "vison/slug.hpp"

namespace vison {

std::string_view aspect_individual(Aspect aspect) {
  switch (aspect) {
    case Aspect::Behavior: return "behavior";
    case Aspect::Structure: return "structure";
    case Aspect::Evolution: return "evolution";
    case Aspect::Combined: return "combined";
  }
  return "";
}

std::string_view aspect_class(Aspect aspect) {
  switch (aspect) {
    case Aspect::Behavior: return ids::kBehaviorTool;
    case Aspect::Structure: return ids::kStructureTool;
    case Aspect::Evolution: return ids::kEvolutionTool;
    case Aspect::Combined: return ids::kFramework;
  }
  return "";
}

std::string_view medium_individual(Medium medium) { return medium == Medium::SCS ? "scs" : "i3d"; }

std::string_view evaluation_individual(Evaluation evaluation) {
  switch (evaluation) {
    case Evaluation::Experiment: return "experiment";
    case Evaluation::UsageScenario: return "usage-scenario";
    case Evaluation::CaseStudy: return "case-study";
    case Evaluation::Survey: return "survey";
    case Evaluation::Anecdotal: return "anecdotal";
    case Evaluation::Theoretical: return "theoretical";
    case Evaluation::None: return "none";
  }
  return "";
}

std::string_view license_individual(License license) {
  switch (license) {
    case License::Free: return "free";
    case License::Commercial: return "commercial";
    case License::Unknown: return "unknown";
  }
  return "";
}

std::vector<std::string_view> data_sources(Aspect aspect) {
  switch (aspect) {
    case Aspect::Behavior: return {ids::kRuntime};
    case Aspect::Structure: return {ids::kSourceCode};
    case Aspect::Evolution: return {ids::kVersionHistory};
    case Aspect::Combined: return {ids::kRuntime, ids::kSourceCode, ids::kVersionHistory};
  }
  return {};
}

namespace {

constexpr Aspect kAspects[] = {Aspect::Behavior, Aspect::Structure, Aspect::Evolution, Aspect::Combined};
constexpr Medium kMedia[] = {Medium::SCS, Medium::I3D};
constexpr Evaluation kEvaluations[] = {Evaluation::Experiment, Evaluation::UsageScenario,
                                       Evaluation::CaseStudy,  Evaluation::Survey,
                                       Evaluation::Anecdotal,  Evaluation::Theoretical,
                                       Evaluation::None};
constexpr License kLicenses[] = {License::Free, License::Commercial, License::Unknown};

void require_schema_ids(const Ontology& ontology) {
  std::vector<std::string> missing;
  auto need_class = [&](std::string_view id) {
    if (ontology.find_class(id) == nullptr) missing.push_back("class " + std::string(id));
  };
  auto need_property = [&](std::string_view id) {
    if (ontology.find_property(id) == nullptr) missing.push_back("property " + std::string(id));
  };
  auto need_individual = [&](std::string_view id) {
    if (ontology.find_individual(id) == nullptr) missing.push_back("individual " + std::string(id));
  };
  for (auto id : {ids::kTool, ids::kEnvironment, ids::kTechnique, ids::kConcernKeyword}) need_class(id);
  for (Aspect aspect : kAspects) {
    need_class(aspect_class(aspect));
    need_individual(aspect_individual(aspect));
    for (auto source : data_sources(aspect)) need_individual(source);
  }
  for (auto id : {ids::kAspectIs, ids::kHasMedium, ids::kUsesTechnique, ids::kRunsIn, ids::kEvaluatedBy,
                  ids::kAddressesConcernKeyword, ids::kHasDataSource, ids::kHasLicense, ids::kLastUpdate}) {
    need_property(id);
  }
  for (Medium medium : kMedia) need_individual(medium_individual(medium));
  for (Evaluation evaluation : kEvaluations) need_individual(evaluation_individual(evaluation));
  for (License license : kLicenses) need_individual(license_individual(license));
  if (!missing.empty()) {
    std::string message = "schema is missing required ids:";
    for (const auto& item : missing) message += " " + item + ";";
    throw BuildError(message);
  }
}

// Declares the facet value on first sight; later sightings only add the class.
std::string facet_individual(Ontology& ontology, const std::string& label, std::string_view cls) {
  std::string id = slugify(label);
  if (ontology.find_individual(id) == nullptr) ontology.declare_individual(id, label);
  ontology.assert_membership(id, cls);
  return id;
}

template <typename Enum, std::size_t N>
std::optional<Enum> reverse(const Enum (&values)[N], std::string_view (*to_id)(Enum), std::string_view id) {
  for (Enum value : values) {
    if (to_id(value) == id) return value;
  }
  return std::nullopt;
}

}  // namespace

Ontology build_ontology(const std::vector<ToolRecord>& records, const Schema& schema) {
  Ontology ontology = schema_ontology(schema);
  require_schema_ids(ontology);

  const std::vector<std::string> slugs = assign_tool_slugs(records);
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (ontology.find_individual(slugs[i]) != nullptr) {
      throw BuildError("tool id '" + slugs[i] + "' collides with a schema individual");
    }
    ontology.declare_individual(slugs[i], records[i].name);
  }

  for (std::size_t i = 0; i < records.size(); ++i) {
    const ToolRecord& r = records[i];
    const std::string& id = slugs[i];
    ontology.assert_membership(id, aspect_class(r.aspect));
    ontology.assert_property_value(id, ids::kAspectIs, std::string(aspect_individual(r.aspect)));
    ontology.assert_property_value(id, ids::kLastUpdate, r.year);
    for (Medium medium : r.media) {
      ontology.assert_property_value(id, ids::kHasMedium, std::string(medium_individual(medium)));
    }
    for (Evaluation evaluation : r.evaluations) {
      ontology.assert_property_value(id, ids::kEvaluatedBy, std::string(evaluation_individual(evaluation)));
    }
    for (auto source : data_sources(r.aspect)) {
      ontology.assert_property_value(id, ids::kHasDataSource, std::string(source));
    }
    if (r.license) {
      ontology.assert_property_value(id, ids::kHasLicense, std::string(license_individual(*r.license)));
    }
    ontology.annotate(id, ids::kUrlAnnotation, r.url);
    ontology.annotate(id, ids::kConcernAnnotation, r.concern);
  }

  for (std::size_t i = 0; i < records.size(); ++i) {
    for (const auto& environment : records[i].environments) {
      ontology.assert_property_value(slugs[i], ids::kRunsIn,
                                     facet_individual(ontology, environment, ids::kEnvironment));
    }
    for (const auto& technique : records[i].techniques) {
      ontology.assert_property_value(slugs[i], ids::kUsesTechnique,
                                     facet_individual(ontology, technique, ids::kTechnique));
    }
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (const auto& keyword : records[i].concern_keywords) {
      ontology.assert_property_value(slugs[i], ids::kAddressesConcernKeyword,
                                     facet_individual(ontology, keyword, ids::kConcernKeyword));
    }
  }

  ConsistencyReport report = check_consistency(ontology);
  if (!report.consistent()) {
    throw BuildError("built ontology is inconsistent (" + std::to_string(report.violations.size()) +
                         " violations)",
                     std::move(report));
  }
  return ontology;
}

std::vector<ToolRecord> export_records(const Ontology& ontology) {
  std::vector<ToolRecord> out;
  for (const auto& id : tool_universe(ontology)) {
    const Individual& tool = *ontology.find_individual(id);
    ToolRecord r;
    r.name = tool.label;
    for (const auto& assertion : tool.property_assertions) {
      if (const auto* year = std::get_if<std::int64_t>(&assertion.target)) {
        if (assertion.property == ids::kLastUpdate) r.year = *year;
        continue;
      }
      const std::string& target = std::get<std::string>(assertion.target);
      const Individual* value = ontology.find_individual(target);
      const std::string& label = value ? value->label : target;
      const std::string& property = assertion.property;
      if (property == ids::kAspectIs) {
        if (auto aspect = reverse(kAspects, aspect_individual, target)) r.aspect = *aspect;
      } else if (property == ids::kHasMedium) {
        if (auto medium = reverse(kMedia, medium_individual, target)) r.media.insert(*medium);
      } else if (property == ids::kEvaluatedBy) {
        if (auto evaluation = reverse(kEvaluations, evaluation_individual, target)) r.evaluations.insert(*evaluation);
      } else if (property == ids::kHasLicense) {
        r.license = reverse(kLicenses, license_individual, target);
      } else if (property == ids::kRunsIn) {
        r.environments.insert(label);
      } else if (property == ids::kUsesTechnique) {
        r.techniques.insert(label);
      } else if (property == ids::kAddressesConcernKeyword) {
        r.concern_keywords.insert(target);
      }
    }
    if (auto it = tool.annotations.find(std::string(ids::kUrlAnnotation)); it != tool.annotations.end()) {
      r.url = it->second;
    }
    if (auto it = tool.annotations.find(std::string(ids::kConcernAnnotation)); it != tool.annotations.end()) {
      r.concern = it->second;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace vison
