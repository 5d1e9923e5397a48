#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "capkit/integrals.hpp"
#include "document.hpp"

namespace capkit::cli {
namespace {

/// A semantic failure already rendered as a report document.
struct Failure {
  Json report;
};

struct Context {
  std::string command;
  std::vector<std::string> files;
  std::size_t max_ground = CapacityLimits{}.max_ground;
  const std::function<std::string()>* read_stdin = nullptr;

  [[nodiscard]] CapacityLimits limits() const { return {max_ground}; }

  [[nodiscard]] std::vector<Document> inputs() const {
    std::vector<Document> docs;
    const auto take = [&](const std::string& text) {
      for (auto& d : parse_documents(text, limits())) docs.push_back(std::move(d));
    };
    if (files.empty()) take((*read_stdin)());
    for (const auto& path : files) {
      if (path == "-") {
        take((*read_stdin)());
        continue;
      }
      std::ifstream in(path, std::ios::binary);
      if (!in) throw SchemaError("cannot read " + path);
      std::ostringstream text;
      text << in.rdbuf();
      take(text.str());
    }
    return docs;
  }

  [[nodiscard]] Capacity capacity(const CapacityDraft& d) const {
    try {
      return realize(d, limits());
    } catch (const CapacityError& e) {
      throw Failure{report_json(&d.ground, e.report, command)};
    }
  }
};

struct Outcome {
  Json doc;
  int exit_code = kExitOk;
};

template <class T>
const T* find(const std::vector<Document>& docs) {
  for (const auto& d : docs) {
    if (const auto* p = std::get_if<T>(&d)) return p;
  }
  return nullptr;
}

template <class T>
const T& require(const std::vector<Document>& docs, const std::string& command, const char* kind) {
  if (const auto* p = find<T>(docs)) return *p;
  throw SchemaError(command + " needs a " + kind + " document");
}

const Document& first_input(const std::vector<Document>& docs, const std::string& command) {
  if (docs.empty()) throw SchemaError(command + " needs an input document");
  return docs.front();
}

GroundSet ground_of(const Document& doc) {
  return std::visit(
      [](const auto& d) -> GroundSet {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, CapacityDraft> || std::is_same_v<T, GeneratedHyperHyperspace> ||
                      std::is_same_v<T, SectionFamily> || std::is_same_v<T, TableFunctionalDoc>) {
          return d.ground;
        } else if constexpr (std::is_same_v<T, SpaceMap>) {
          return d.domain();
        } else {
          return d.ground();
        }
      },
      doc);
}

Json single_violation(const std::string& command, const std::string& rule, const std::string& detail) {
  Report r;
  r.add({rule, detail, {}, {}});
  return report_json(nullptr, r, command);
}

UnitValue value_flag(const std::string& text) {
  try {
    return parse_value(text);
  } catch (const DomainError& e) {
    throw SchemaError(e.what());
  }
}

// validate

Report validate_draft(const CapacityDraft& d, const CapacityLimits& limits) {
  Report r;
  if (d.ground.size() > limits.max_ground) {
    r.add({"size-cap", "ground set exceeds the capacity size cap of " + std::to_string(limits.max_ground), {}, {}});
    return r;
  }
  if (d.mode == BuildMode::monotone_completion) {
    try {
      const Capacity c = realize(d, limits);
      return check_capacity_axioms(c.ground(), c.table());
    } catch (const CapacityError& e) {
      return e.report;
    } catch (const ValidationError& e) {
      r.add({"completion", e.what(), {}, {}});
      return r;
    }
  }
  std::vector<std::optional<UnitValue>> table(d.ground.powerset_size());
  for (const auto& a : d.assignments) {
    auto& slot = table[a.set.bits];
    if (slot) {
      r.add({"duplicate-assignment", "subset assigned twice", {a.set}, {*slot, a.value}});
    } else {
      slot = a.value;
    }
  }
  for (std::uint32_t m = 0; m < table.size(); ++m) {
    if (!table[m]) r.add({"missing-assignment", "exact mode needs a value for every subset", {Subset{m}}, {}});
  }
  if (!r.passed()) return r;
  std::vector<UnitValue> values;
  for (const auto& v : table) values.push_back(*v);
  return check_capacity_axioms(d.ground, values);
}

Report validate_functional(const TableFunctionalDoc& f) {
  const Functional i = Functional::from_table(f.ground, f.grid, f.table);
  try {
    return check_sugeno_axioms(i, exhaustive_samples(f.ground, f.grid));
  } catch (const DomainError& e) {
    Report r;
    r.add({"incomplete-table", e.what(), {}, {}});
    return r;
  }
}

Report validate_sections(const SectionFamily& f) {
  Report r;
  r.checked = f.sections.size();
  try {
    reconstruct_from_sections(f);
  } catch (const ValidationError& e) {
    r.add({"section-family", e.what(), {}, {}});
  }
  return r;
}

Report validate_one(const Document& doc, const CapacityLimits& limits) {
  if (const auto* d = std::get_if<CapacityDraft>(&doc)) return validate_draft(*d, limits);
  if (const auto* s = std::get_if<Subgraph>(&doc)) return check_subgraph_axioms(*s);
  if (const auto* f = std::get_if<TableFunctionalDoc>(&doc)) return validate_functional(*f);
  if (const auto* f = std::get_if<SectionFamily>(&doc)) return validate_sections(*f);
  Report r;
  r.checked = 1;  // construction already enforced the invariants
  return r;
}

Outcome cmd_validate(const Context& ctx) {
  const auto docs = ctx.inputs();
  if (docs.empty()) throw SchemaError("validate needs an input document");
  Json reports = Json::array();
  bool ok = true;
  for (const auto& doc : docs) {
    const GroundSet g = ground_of(doc);
    const Report r = validate_one(doc, ctx.limits());
    Json j = report_json(&g, r, "validate");
    j["document"] = kind_of(doc);
    ok = ok && r.passed();
    reports.push_back(std::move(j));
  }
  return {docs.size() == 1 ? reports.front() : reports, ok ? kExitOk : kExitInvalid};
}

// integrate

Pseudomultiplication odot_of(const std::string& name) {
  if (name == "min") return Pseudomultiplication::min();
  if (name == "product") return Pseudomultiplication::product();
  return Pseudomultiplication::probabilistic_sum();
}

Outcome cmd_integrate(const Context& ctx, const std::string& kind, const std::string& odot) {
  const auto docs = ctx.inputs();
  const Capacity c = ctx.capacity(require<CapacityDraft>(docs, "integrate", "capacity"));
  const Observable& phi = require<Observable>(docs, "integrate", "observable");
  Json out;
  if (kind == "sugeno") {
    out = value_json(sugeno(c, phi));
  } else if (kind == "choquet") {
    out = value_json(choquet(c, phi));
  } else {
    const FuzzyResult r = fuzzy(c, phi, odot_of(odot));
    out = value_json(r.value);
    out["odot"] = odot;
    out["continuity_hypothesis"] = r.continuity_hypothesis;
  }
  out["integral"] = kind;
  return {out};
}

// pushforward, support

Outcome cmd_pushforward(const Context& ctx) {
  const auto docs = ctx.inputs();
  const SpaceMap& f = require<SpaceMap>(docs, "pushforward", "map");
  for (const auto& doc : docs) {
    if (const auto* d = std::get_if<CapacityDraft>(&doc)) return {to_json(pushforward(f, ctx.capacity(*d)))};
    if (const auto* h = std::get_if<InclusionHyperspace>(&doc)) return {to_json(map_hyperspace(f, *h))};
    if (const auto* c2 = std::get_if<Capacity2>(&doc)) return {to_json(pushforward2(f, *c2))};
  }
  throw SchemaError("pushforward needs a capacity, hyperspace or capacity2 document");
}

Outcome cmd_support(const Context& ctx) {
  const auto docs = ctx.inputs();
  const Capacity c = ctx.capacity(require<CapacityDraft>(docs, "support", "capacity"));
  Json out = subset_json(c.ground(), support(c));
  out["version"] = kDocumentVersion;
  out["kind"] = "subset";
  out["space"] = c.ground().names();
  return {out};
}

// unit, mu

Outcome cmd_unit(const Context& ctx, const std::string& monad, const std::optional<std::string>& element,
                 const std::vector<std::string>& space, bool inner) {
  const bool m = monad == "M";
  if (element) {
    const GroundSet g = space.empty() ? ground_of(first_input(ctx.inputs(), "unit")) : GroundSet(space);
    if (!g.contains(*element)) throw SchemaError("unknown element \"" + *element + "\"");
    const std::size_t x = g.index_of(*element);
    return {m ? to_json(dirac(g, x)) : to_json(eta_G(g, x))};
  }
  const auto docs = ctx.inputs();
  const Document& doc = first_input(docs, "unit");
  if (m) {
    if (const auto* d = std::get_if<CapacityDraft>(&doc)) {
      const Capacity c = ctx.capacity(*d);
      return {to_json(inner ? map_eta(c) : eta_MM(c))};
    }
    if (const auto* c2 = std::get_if<Capacity2>(&doc)) return {to_json(inner ? map_eta2(*c2) : eta_MMM(*c2))};
    throw SchemaError("unit --monad M needs --element, a capacity or a capacity2 document");
  }
  if (const auto* h = std::get_if<InclusionHyperspace>(&doc)) return {to_json(inner ? map_eta_G(*h) : eta_GG(*h))};
  throw SchemaError("unit --monad G needs --element or a hyperspace document");
}

Outcome cmd_mu(const Context& ctx, bool inner) {
  const auto docs = ctx.inputs();
  const Document& doc = first_input(docs, "mu");
  if (const auto* c2 = std::get_if<Capacity2>(&doc)) {
    if (const auto* phi = find<Observable>(docs)) {
      Json out = value_json(mu_via_delta(*c2, *phi));
      out["integral"] = "delta";
      return {out};
    }
    return {to_json(mu_M(*c2))};
  }
  if (const auto* c3 = std::get_if<Capacity3>(&doc)) return {to_json(inner ? map_mu(*c3) : mu_MM(*c3))};
  if (const auto* hh = std::get_if<GeneratedHyperHyperspace>(&doc)) return {to_json(mu_G(*hh))};
  throw SchemaError("mu needs a capacity2, capacity3 or hyperhyperspace document");
}

// hyperspace, embed

Outcome cmd_hyperspace(const Context& ctx, bool all, const std::vector<std::string>& space) {
  if (all) {
    if (space.empty()) throw SchemaError("hyperspace --all needs --space");
    const GroundSet g(space);
    if (g.size() > 4) throw SchemaError("hyperspace --all is limited to at most 4 elements");
    Json list = Json::array();
    const auto hs = all_hyperspaces(g);
    for (const auto& h : hs) list.push_back(to_json(h)["sets"]);
    return {Json{{"version", kDocumentVersion},
                 {"kind", "hyperspace-list"},
                 {"space", g.names()},
                 {"count", hs.size()},
                 {"hyperspaces", list}}};
  }
  const auto docs = ctx.inputs();
  const auto& h = require<InclusionHyperspace>(docs, "hyperspace", "hyperspace");
  Json out = to_json(h);
  if (const auto* phi = find<Observable>(docs)) {
    out["m_lower"] = render_value(m_lower(h, *phi));
    out["m_upper"] = render_value(m_upper(h, *phi));
  }
  return {out};
}

Outcome cmd_embed(const Context& ctx, bool check) {
  const auto docs = ctx.inputs();
  const Document& doc = first_input(docs, "embed");
  if (const auto* h = std::get_if<InclusionHyperspace>(&doc)) return {to_json(embed_capacity(*h))};
  if (const auto* hh = std::get_if<GeneratedHyperHyperspace>(&doc)) {
    if (!check) return {to_json(encode_hyperhyperspace(*hh))};
    const Report r = check_morphism(*hh);
    return {report_json(&hh->ground, r, "embed"), r.passed() ? kExitOk : kExitInvalid};
  }
  throw SchemaError("embed needs a hyperspace or hyperhyperspace document");
}

// sections, subgraph, reconstruct

Outcome cmd_sections(const Context& ctx, const std::vector<std::string>& thresholds) {
  const auto docs = ctx.inputs();
  const Capacity c = ctx.capacity(require<CapacityDraft>(docs, "sections", "capacity"));
  std::vector<UnitValue> t;
  for (const auto& s : thresholds) t.push_back(value_flag(s));
  return {to_json(sections(c, t))};
}

Outcome cmd_subgraph(const Context& ctx) {
  const auto docs = ctx.inputs();
  return {to_json(to_subgraph(ctx.capacity(require<CapacityDraft>(docs, "subgraph", "capacity"))))};
}

Outcome cmd_reconstruct(const Context& ctx) {
  const auto docs = ctx.inputs();
  const Document& doc = first_input(docs, "reconstruct");
  try {
    if (const auto* s = std::get_if<Subgraph>(&doc)) return {to_json(from_subgraph(*s))};
    if (const auto* f = std::get_if<SectionFamily>(&doc)) return {to_json(reconstruct_from_sections(*f))};
    if (const auto* f = std::get_if<TableFunctionalDoc>(&doc)) {
      return {to_json(reconstruct(Functional::from_table(f->ground, f->grid, f->table)))};
    }
  } catch (const CapacityError& e) {
    const GroundSet g = ground_of(doc);
    throw Failure{report_json(&g, e.report, "reconstruct")};
  } catch (const FunctionalError& e) {
    const GroundSet g = ground_of(doc);
    throw Failure{report_json(&g, e.report, "reconstruct")};
  }
  throw SchemaError("reconstruct needs a subgraph, sections or functional document");
}

// laws

Outcome cmd_laws(const std::string& suite, std::uint64_t seed, std::size_t instances) {
  const LawReport r = run_law_suite(suite, {seed, instances});
  return {law_report_json(r), r.passed() ? kExitOk : kExitInvalid};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate", "integrate", "pushforward", "support",
                                              "unit",     "mu",        "hyperspace",  "embed",
                                              "sections", "subgraph",  "reconstruct", "laws"};
  return names;
}

RunResult run(const std::string& command, const std::vector<std::string>& args,
              const std::function<std::string()>& read_stdin) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), command) == names.end()) {
    return {kExitSchema, "", "unknown command \"" + command + "\"\n"};
  }

  Context ctx;
  ctx.command = command;
  ctx.read_stdin = &read_stdin;

  CLI::App app("capkit " + command, "capkit " + command);
  app.add_option("inputs", ctx.files, "input documents (default: stdin)");
  app.add_option("--max-ground", ctx.max_ground, "largest ground set accepted for capacities")
      ->check(CLI::Range(1, static_cast<int>(kMaskWidth)));

  std::string kind, odot = "min", monad = "M", suite;
  std::optional<std::string> element;
  std::vector<std::string> space, thresholds;
  bool inner = false, all = false, check = false;
  std::uint64_t seed = LawOptions{}.seed;
  std::size_t instances = LawOptions{}.random_instances;

  if (command == "integrate") {
    app.add_option("--kind", kind, "integral")->required()->check(CLI::IsMember({"sugeno", "choquet", "fuzzy"}));
    app.add_option("--odot", odot, "pseudomultiplication for --kind fuzzy")
        ->check(CLI::IsMember({"min", "product", "probsum"}));
  } else if (command == "unit") {
    app.add_option("--monad", monad, "M (capacities) or G (hyperspaces)")->check(CLI::IsMember({"M", "G"}));
    app.add_option("--element", element, "build the unit at this element");
    app.add_option("--space", space, "element names")->delimiter(',');
    app.add_flag("--inner", inner, "apply the unit inside (Mη or Gη) instead of outside");
  } else if (command == "mu") {
    app.add_flag("--inner", inner, "for capacity3 input, apply μ inside (Mμ) instead of μ_M");
  } else if (command == "hyperspace") {
    app.add_flag("--all", all, "enumerate every inclusion hyperspace on --space");
    app.add_option("--space", space, "element names")->delimiter(',');
  } else if (command == "embed") {
    app.add_flag("--check", check, "check the monad morphism squares on a hyperhyperspace");
  } else if (command == "sections") {
    app.add_option("--thresholds", thresholds, "α values (default: the positive values of c)")->delimiter(',');
  } else if (command == "laws") {
    app.add_option("--suite", suite, "suite")->required()->check(
        CLI::IsMember({"monad-m", "monad-g", "morphism", "integrals"}));
    app.add_option("--seed", seed, "random seed");
    app.add_option("--instances", instances, "random instances per law");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {kExitOk, app.help(), ""};
  } catch (const CLI::ParseError& e) {
    return {kExitSchema, "", std::string(e.what()) + "\n"};
  }

  Outcome outcome;
  try {
    if (command == "validate") outcome = cmd_validate(ctx);
    else if (command == "integrate") outcome = cmd_integrate(ctx, kind, odot);
    else if (command == "pushforward") outcome = cmd_pushforward(ctx);
    else if (command == "support") outcome = cmd_support(ctx);
    else if (command == "unit") outcome = cmd_unit(ctx, monad, element, space, inner);
    else if (command == "mu") outcome = cmd_mu(ctx, inner);
    else if (command == "hyperspace") outcome = cmd_hyperspace(ctx, all, space);
    else if (command == "embed") outcome = cmd_embed(ctx, check);
    else if (command == "sections") outcome = cmd_sections(ctx, thresholds);
    else if (command == "subgraph") outcome = cmd_subgraph(ctx);
    else if (command == "reconstruct") outcome = cmd_reconstruct(ctx);
    else outcome = cmd_laws(suite, seed, instances);
  } catch (const SchemaError& e) {
    return {kExitSchema, "", std::string("schema error: ") + e.what() + "\n"};
  } catch (const Failure& f) {
    return {kExitInvalid, f.report.dump(2) + "\n", "validation failed\n"};
  } catch (const Error& e) {
    return {kExitInvalid, single_violation(command, "error", e.what()).dump(2) + "\n", std::string(e.what()) + "\n"};
  } catch (const ArithmeticOverflow& e) {
    return {kExitInvalid, single_violation(command, "overflow", e.what()).dump(2) + "\n",
            std::string(e.what()) + "\n"};
  }
  return {outcome.exit_code, outcome.doc.dump(2) + "\n", ""};
}

}  // namespace capkit::cli
