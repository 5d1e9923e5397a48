#include "document.hpp"

#include <algorithm>

namespace capkit::cli {
namespace {

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError("expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw SchemaError(std::string("field \"") + key + "\" must be an array");
  return a;
}

UnitValue value_of(const Json& j) {
  try {
    if (j.is_string()) return parse_value(j.get<std::string>());
    if (j.is_number_integer()) return parse_value(std::to_string(j.get<std::int64_t>()));
  } catch (const DomainError& e) {
    throw SchemaError(e.what());
  }
  throw SchemaError("values must be strings \"p/q\" or integers, got " + j.dump());
}

std::vector<std::string> names_of(const Json& j) {
  if (!j.is_array()) throw SchemaError("expected an array of element names, got " + j.dump());
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw SchemaError("element names must be strings, got " + e.dump());
    out.push_back(e.get<std::string>());
  }
  return out;
}

GroundSet ground_of(const Json& j) {
  auto names = names_of(j);
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw SchemaError("space lists an element twice");
  }
  if (names.size() > kMaskWidth) throw SchemaError("space has more than 30 elements");
  return GroundSet(std::move(names));
}

Subset subset_of(const GroundSet& ground, const Json& j) {
  const auto names = names_of(j);
  Subset s;
  for (const auto& n : names) {
    if (!ground.contains(n)) throw SchemaError("unknown element \"" + n + "\"");
    s = s.with(ground.index_of(n));
  }
  return s;
}

/// Index capacities address support points by position.
Subset index_subset(std::size_t points, const Json& j) {
  if (!j.is_array()) throw SchemaError("index sets must be arrays of support positions");
  Subset s;
  for (const auto& e : j) {
    if (!e.is_number_unsigned() || e.get<std::size_t>() >= points) {
      throw SchemaError("support position out of range: " + e.dump());
    }
    s = s.with(e.get<std::size_t>());
  }
  return s;
}

/// The space of a nested payload defaults to the enclosing one.
GroundSet nested_ground(const Json& j, const GroundSet& outer) {
  if (!j.is_object()) throw SchemaError("expected an object");
  if (!j.contains("space")) return outer;
  GroundSet g = ground_of(j["space"]);
  if (!(g == outer)) throw SchemaError("nested payload space differs from the document space");
  return g;
}

BuildMode mode_of(const Json& j, BuildMode fallback) {
  if (!j.contains("mode")) return fallback;
  const Json& m = j["mode"];
  if (m == "exact") return BuildMode::exact;
  if (m == "completion") return BuildMode::monotone_completion;
  throw SchemaError("mode must be \"exact\" or \"completion\", got " + m.dump());
}

CapacityDraft capacity_draft(const Json& j, const GroundSet& ground) {
  CapacityDraft d{ground, mode_of(j, BuildMode::exact), {}};
  if (ground.size() > kMaskWidth) throw SchemaError("space too large");
  if (j.contains("table")) {
    const Json& t = j["table"];
    if (!t.is_array() || t.size() != ground.powerset_size()) {
      throw SchemaError("\"table\" must list one value per subset in mask order");
    }
    for (std::uint32_t m = 0; m < t.size(); ++m) d.assignments.push_back({Subset{m}, value_of(t[m])});
    return d;
  }
  for (const auto& a : array_field(j, "assignments")) {
    d.assignments.push_back({subset_of(ground, field(a, "set")), value_of(field(a, "value"))});
  }
  return d;
}

Capacity index_capacity(const Json& j, std::size_t points, const CapacityLimits& limits) {
  const GroundSet g = GroundSet::indices(points);
  const BuildMode mode = mode_of(j, BuildMode::monotone_completion);
  std::vector<Assignment> assignments;
  for (const auto& a : array_field(j, "assignments")) {
    assignments.push_back({index_subset(points, field(a, "set")), value_of(field(a, "value"))});
  }
  return build_capacity(g, assignments, mode, limits);
}

InclusionHyperspace hyperspace_of(const Json& sets, const GroundSet& ground) {
  if (!sets.is_array()) throw SchemaError("a hyperspace is an array of generating sets");
  std::vector<Subset> gens;
  for (const auto& s : sets) gens.push_back(subset_of(ground, s));
  return up_closure(ground, gens);
}

Capacity2 capacity2_of(const Json& j, const GroundSet& ground, const CapacityLimits& limits) {
  std::vector<Capacity> points;
  for (const auto& p : array_field(j, "support")) points.push_back(realize(capacity_draft(p, nested_ground(p, ground)), limits));
  if (points.empty()) throw SchemaError("\"support\" must be non-empty");
  return Capacity2::make(std::move(points), index_capacity(field(j, "index"), points.size(), limits));
}

Document parse_unchecked(const Json& j, const CapacityLimits& limits) {
  if (!j.is_object()) throw SchemaError("a document must be a JSON object");
  const Json& version = field(j, "version");
  if (version != kDocumentVersion) throw SchemaError("unsupported document version " + version.dump());
  const Json& kind_json = field(j, "kind");
  if (!kind_json.is_string()) throw SchemaError("\"kind\" must be a string");
  const std::string kind = kind_json.get<std::string>();

  if (kind == "map") {
    const GroundSet dom = ground_of(field(j, "domain"));
    const GroundSet cod = ground_of(field(j, "codomain"));
    const Json& image = field(j, "image");
    if (!image.is_object()) throw SchemaError("\"image\" must map each domain element to a codomain element");
    std::vector<std::size_t> targets;
    for (const auto& x : dom.names()) {
      const auto it = image.find(x);
      if (it == image.end() || !it->is_string()) throw SchemaError("no image given for \"" + x + "\"");
      if (!cod.contains(it->get<std::string>())) throw SchemaError("unknown codomain element " + it->dump());
      targets.push_back(cod.index_of(it->get<std::string>()));
    }
    if (image.size() != dom.size()) throw SchemaError("\"image\" names elements outside the domain");
    return SpaceMap(dom, cod, std::move(targets));
  }

  const GroundSet ground = ground_of(field(j, "space"));
  if (kind == "capacity") return capacity_draft(j, ground);
  if (kind == "observable") {
    const Json& v = field(j, "values");
    std::vector<UnitValue> values(ground.size());
    if (v.is_array()) {
      if (v.size() != ground.size()) throw SchemaError("\"values\" must have one entry per element");
      for (std::size_t i = 0; i < v.size(); ++i) values[i] = value_of(v[i]);
    } else if (v.is_object()) {
      if (v.size() != ground.size()) throw SchemaError("\"values\" must have one entry per element");
      for (std::size_t i = 0; i < ground.size(); ++i) {
        const auto it = v.find(ground.name(i));
        if (it == v.end()) throw SchemaError("no value for \"" + ground.name(i) + "\"");
        values[i] = value_of(*it);
      }
    } else {
      throw SchemaError("\"values\" must be an array or an object");
    }
    return Observable(ground, std::move(values));
  }
  if (kind == "hyperspace") return hyperspace_of(field(j, "sets"), ground);
  if (kind == "capacity2") return capacity2_of(j, ground, limits);
  if (kind == "capacity3") {
    std::vector<Capacity2> points;
    for (const auto& p : array_field(j, "support")) points.push_back(capacity2_of(p, nested_ground(p, ground), limits));
    if (points.empty()) throw SchemaError("\"support\" must be non-empty");
    return Capacity3::make(std::move(points), index_capacity(field(j, "index"), points.size(), limits));
  }
  if (kind == "hyperhyperspace") {
    GeneratedHyperHyperspace hh{ground, {}};
    for (const auto& gen : array_field(j, "generators")) {
      if (!gen.is_array()) throw SchemaError("each generator is an array of hyperspaces");
      auto& family = hh.generators.emplace_back();
      for (const auto& h : gen) family.push_back(hyperspace_of(h, ground));
    }
    hh.validate();
    return hh;
  }
  if (kind == "subgraph") {
    std::vector<std::optional<UnitValue>> level(ground.powerset_size());
    for (const auto& e : array_field(j, "levels")) {
      const Subset s = subset_of(ground, field(e, "set"));
      if (level[s.bits]) throw SchemaError("subgraph lists " + ground.describe(s) + " twice");
      level[s.bits] = value_of(field(e, "level"));
    }
    std::vector<UnitValue> full;
    for (std::uint32_t m = 0; m < level.size(); ++m) {
      if (!level[m]) throw SchemaError("subgraph has no level for " + ground.describe(Subset{m}));
      full.push_back(*level[m]);
    }
    return Subgraph(ground, std::move(full));
  }
  if (kind == "sections") {
    SectionFamily f{ground, {}, {}};
    for (const auto& t : array_field(j, "thresholds")) f.thresholds.push_back(value_of(t));
    for (const auto& s : array_field(j, "sections")) f.sections.push_back(hyperspace_of(s, ground));
    if (f.thresholds.size() != f.sections.size()) throw SchemaError("one section is needed per threshold");
    return f;
  }
  if (kind == "functional") {
    TableFunctionalDoc f{ground, 1, {}};
    const Json& grid = field(j, "grid");
    if (!grid.is_number_unsigned() || grid.get<std::int64_t>() < 1) throw SchemaError("\"grid\" must be a positive integer");
    f.grid = grid.get<std::int64_t>();
    for (const auto& e : array_field(j, "entries")) {
      const Json& phi = field(e, "phi");
      if (!phi.is_array() || phi.size() != ground.size()) throw SchemaError("\"phi\" must have one value per element");
      std::vector<UnitValue> key;
      for (const auto& v : phi) key.push_back(value_of(v));
      if (!f.table.emplace(std::move(key), value_of(field(e, "value"))).second) {
        throw SchemaError("functional table lists " + phi.dump() + " twice");
      }
    }
    return f;
  }
  throw SchemaError("unknown document kind \"" + kind + "\"");
}

Json base(const char* kind, const GroundSet& ground) {
  return Json{{"version", kDocumentVersion}, {"kind", kind}, {"space", ground.names()}};
}

Json sets_json(const GroundSet& ground, std::span<const Subset> sets) {
  Json out = Json::array();
  for (const Subset s : sets) out.push_back(ground.names_of(s));
  return out;
}

std::vector<Subset> canonical_masks(std::size_t n) {
  std::vector<Subset> out;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) out.push_back(Subset{m});
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Json index_json(const Capacity& index) {
  Json a = Json::array();
  for (const Subset s : canonical_masks(index.ground().size())) {
    Json set = Json::array();
    for (std::size_t i = 0; i < index.ground().size(); ++i) {
      if (s.contains(i)) set.push_back(i);
    }
    a.push_back({{"set", set}, {"value", render_value(index(s))}});
  }
  return {{"mode", "exact"}, {"assignments", a}};
}

Json capacity_payload(const Capacity& c) {
  Json a = Json::array();
  for (const Subset s : canonical_masks(c.ground().size())) {
    a.push_back({{"set", c.ground().names_of(s)}, {"value", render_value(c(s))}});
  }
  return {{"mode", "exact"}, {"assignments", a}};
}

Json capacity2_payload(const Capacity2& c2) {
  Json support = Json::array();
  for (const auto& c : c2.support()) support.push_back(capacity_payload(c));
  return {{"support", support}, {"index", index_json(c2.index())}};
}

}  // namespace

std::string kind_of(const Document& doc) {
  return std::visit(Overloaded{
                        [](const CapacityDraft&) { return "capacity"; },
                        [](const Observable&) { return "observable"; },
                        [](const InclusionHyperspace&) { return "hyperspace"; },
                        [](const SpaceMap&) { return "map"; },
                        [](const Capacity2&) { return "capacity2"; },
                        [](const Capacity3&) { return "capacity3"; },
                        [](const GeneratedHyperHyperspace&) { return "hyperhyperspace"; },
                        [](const Subgraph&) { return "subgraph"; },
                        [](const SectionFamily&) { return "sections"; },
                        [](const TableFunctionalDoc&) { return "functional"; },
                    },
                    doc);
}

Document parse_document(const Json& j, const CapacityLimits& limits) {
  try {
    return parse_unchecked(j, limits);
  } catch (const Json::exception& e) {
    throw SchemaError(e.what());
  } catch (const SchemaError&) {
    throw;
  } catch (const ParseError& e) {
    throw SchemaError(e.what());
  }
}

std::vector<Document> parse_documents(const std::string& text, const CapacityLimits& limits) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  std::vector<Document> out;
  if (j.is_array()) {
    for (const auto& d : j) out.push_back(parse_document(d, limits));
  } else {
    out.push_back(parse_document(j, limits));
  }
  return out;
}

Capacity realize(const CapacityDraft& draft, const CapacityLimits& limits) {
  return build_capacity(draft.ground, draft.assignments, draft.mode, limits);
}

Json to_json(const Capacity& c) {
  Json j = base("capacity", c.ground());
  j.update(capacity_payload(c));
  return j;
}

Json to_json(const Observable& phi) {
  Json j = base("observable", phi.ground());
  Json values = Json::array();
  for (const auto& v : phi.values()) values.push_back(render_value(v));
  j["values"] = values;
  return j;
}

Json to_json(const InclusionHyperspace& h) {
  Json j = base("hyperspace", h.ground());
  j["sets"] = sets_json(h.ground(), h.minimal());
  return j;
}

Json to_json(const SpaceMap& f) {
  Json image = Json::object();
  for (std::size_t i = 0; i < f.domain().size(); ++i) image[f.domain().name(i)] = f.codomain().name(f(i));
  return {{"version", kDocumentVersion},
          {"kind", "map"},
          {"domain", f.domain().names()},
          {"codomain", f.codomain().names()},
          {"image", image}};
}

Json to_json(const Capacity2& c2) {
  Json j = base("capacity2", c2.ground());
  j.update(capacity2_payload(c2));
  return j;
}

Json to_json(const Capacity3& c3) {
  Json j = base("capacity3", c3.ground());
  Json support = Json::array();
  for (const auto& c2 : c3.support()) support.push_back(capacity2_payload(c2));
  j["support"] = support;
  j["index"] = index_json(c3.index());
  return j;
}

Json to_json(const Subgraph& s) {
  Json j = base("subgraph", s.ground());
  Json levels = Json::array();
  for (const Subset f : canonical_masks(s.ground().size())) {
    levels.push_back({{"set", s.ground().names_of(f)}, {"level", render_value(s.level()[f.bits])}});
  }
  j["levels"] = levels;
  return j;
}

Json to_json(const SectionFamily& f) {
  Json j = base("sections", f.ground);
  Json thresholds = Json::array();
  for (const auto& t : f.thresholds) thresholds.push_back(render_value(t));
  Json sections = Json::array();
  for (const auto& h : f.sections) sections.push_back(sets_json(f.ground, h.minimal()));
  j["thresholds"] = thresholds;
  j["sections"] = sections;
  return j;
}

Json to_json(const GeneratedHyperHyperspace& hh) {
  Json j = base("hyperhyperspace", hh.ground);
  Json gens = Json::array();
  for (const auto& family : hh.generators) {
    Json g = Json::array();
    for (const auto& h : family) g.push_back(sets_json(hh.ground, h.minimal()));
    gens.push_back(g);
  }
  j["generators"] = gens;
  return j;
}

Json subset_json(const GroundSet& ground, Subset s) {
  return {{"set", ground.names_of(s)}, {"mask", s.bits}};
}

Json report_json(const GroundSet* ground, const Report& report, const std::string& command) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json subsets = Json::array();
    for (const Subset s : v.subsets) {
      subsets.push_back(ground ? subset_json(*ground, s) : Json{{"mask", s.bits}});
    }
    Json values = Json::array();
    for (const auto& x : v.values) values.push_back(render_value(x));
    violations.push_back({{"rule", v.rule}, {"detail", v.detail}, {"subsets", subsets}, {"values", values}});
  }
  Json j{{"version", kDocumentVersion},
         {"kind", "report"},
         {"command", command},
         {"passed", report.passed()},
         {"checked", report.checked},
         {"violations", violations}};
  if (ground) j["space"] = ground->names();
  return j;
}

Json law_report_json(const LawReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"instances", c.instances},
                      {"failures", c.failures},
                      {"passed", c.failures == 0},
                      {"witnesses", c.witnesses}});
  }
  return {{"version", kDocumentVersion},
          {"kind", "law-report"},
          {"suite", report.suite},
          {"passed", report.passed()},
          {"checks", checks}};
}

Json value_json(const UnitValue& v) {
  return {{"version", kDocumentVersion}, {"kind", "value"}, {"value", render_value(v)}};
}

}  // namespace capkit::cli
