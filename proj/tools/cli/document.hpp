#pragma once

// JSON document format shared by every capkit command.
//
// Every document is an object with "version": 1 and a "kind" tag. Values are
// strings "p/q", integers, or short decimals; output always uses reduced
// fractions. Subsets are arrays of element names.

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "capkit/capacity.hpp"
#include "capkit/functional.hpp"
#include "capkit/hyperspace.hpp"
#include "capkit/laws.hpp"
#include "capkit/monad.hpp"
#include "capkit/report.hpp"
#include "capkit/subgraph.hpp"

namespace capkit::cli {

using Json = nlohmann::json;

inline constexpr int kDocumentVersion = 1;

/// Document does not match the schema (exit code 2).
class SchemaError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Raw capacity payload before validation, so that `validate` can report
/// every violation instead of stopping at the first.
struct CapacityDraft {
  GroundSet ground;
  BuildMode mode = BuildMode::exact;
  std::vector<Assignment> assignments;
};

struct TableFunctionalDoc {
  GroundSet ground;
  std::int64_t grid = 1;
  std::map<std::vector<UnitValue>, UnitValue> table;
};

using Document = std::variant<CapacityDraft, Observable, InclusionHyperspace, SpaceMap, Capacity2, Capacity3,
                              GeneratedHyperHyperspace, Subgraph, SectionFamily, TableFunctionalDoc>;

/// "capacity", "observable", ...
std::string kind_of(const Document& doc);

/// Throws SchemaError for malformed documents and CapacityError when a
/// capacity nested inside a higher-level object is invalid.
Document parse_document(const Json& j, const CapacityLimits& limits);

/// Documents from text holding one document or an array of them.
std::vector<Document> parse_documents(const std::string& text, const CapacityLimits& limits);

Capacity realize(const CapacityDraft& draft, const CapacityLimits& limits);

Json to_json(const Capacity& c);
Json to_json(const Observable& phi);
Json to_json(const InclusionHyperspace& h);
Json to_json(const SpaceMap& f);
Json to_json(const Capacity2& c2);
Json to_json(const Capacity3& c3);
Json to_json(const Subgraph& s);
Json to_json(const SectionFamily& f);
Json to_json(const GeneratedHyperHyperspace& hh);
Json subset_json(const GroundSet& ground, Subset s);
Json report_json(const GroundSet* ground, const Report& report, const std::string& command);
Json law_report_json(const LawReport& report);
Json value_json(const UnitValue& v);

}  // namespace capkit::cli
