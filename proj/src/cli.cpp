#include "pv/cli.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "pv/errors.hpp"
#include "pv/parse.hpp"

namespace pv {

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::ParseError, "field '" + field + "': " + what);
}

std::string describe_position(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::vector<std::string> string_list(const Json& j, const std::string& field) {
  if (!j.is_array()) invalid(field, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) invalid(field + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

std::vector<std::vector<std::string>> string_matrix(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) invalid(field, "expected a non-empty array of rows");
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(string_list(j[i], field + "[" + std::to_string(i) + "]"));
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != rows.size())
      invalid(field + "[" + std::to_string(i) + "]", "matrix must be square, row has " + std::to_string(rows[i].size()) +
                                                         " entries for " + std::to_string(rows.size()) + " rows");
  return rows;
}

long positive(const Json& j, const std::string& field, long min) {
  if (!j.is_number_integer()) invalid(field, "expected an integer");
  const long v = j.get<long>();
  if (v < min) invalid(field, "must be at least " + std::to_string(min));
  return v;
}

Setting setting_of(const SpecDocument& spec, FieldPtr* field_out = nullptr) {
  FieldPtr field;
  if (spec.constants_extension)
    field = make_extension(spec.constants_extension->generator, spec.constants_extension->min_poly);
  if (field_out) *field_out = field;
  return Setting(spec.kind, field);
}

CModule module_from(const Setting& s, const std::vector<std::vector<std::string>>& rows, const std::string& field) {
  const std::size_t n = rows.size();
  RatMatrix a(n, n, RatFunc(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      try {
        a(i, j) = parse_ratfunc(rows[i][j], s.field());
      } catch (const Error& e) {
        invalid(field + "[" + std::to_string(i) + "][" + std::to_string(j) + "]", e.what());
      }
    }
  return CModule(s, std::move(a));
}

std::vector<MPoly> polys_from(const std::vector<std::string>& xs, const RingPtr& ring, const FieldPtr& field,
                              const std::string& name) {
  std::vector<MPoly> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    try {
      out.push_back(parse_mpoly(xs[i], ring, field));
    } catch (const Error& e) {
      invalid(name + "[" + std::to_string(i) + "]", e.what());
    }
  }
  return out;
}

RingPtr hopf_names_ring(std::size_t n) {
  std::vector<std::string> names{"w"};
  for (std::size_t k = n * n; k-- > 0;) names.push_back(entry_name("z", k / n, k % n));
  return PolyRing::make(names);
}

Json strings(const std::vector<MPoly>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

Json checks_json(const CheckList& c) {
  Json out = Json::object();
  for (const auto& [name, ok] : c.checks) out[name] = ok;
  return out;
}

}  // namespace

SpecDocument spec_from_json(const Json& j) {
  if (!j.is_object()) invalid("(document)", "expected a JSON object");
  static const std::set<std::string> known{"name",   "setting", "matrix", "ideal",  "subring",           "subhopf",
                                           "bounds", "constants_extension", "simplicity_degree", "subring_module"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) invalid(key, "unknown field");
  SpecDocument spec;
  spec.name = "unnamed";
  if (j.contains("name")) {
    if (!j["name"].is_string()) invalid("name", "expected a string");
    spec.name = j["name"].get<std::string>();
  }
  if (!j.contains("setting") || !j["setting"].is_object() || !j["setting"].contains("kind"))
    invalid("setting.kind", "missing");
  for (const auto& [key, value] : j["setting"].items())
    if (key != "kind") invalid("setting." + key, "unknown field");
  const Json& kind = j["setting"]["kind"];
  if (kind == "differential") {
    spec.kind = SettingKind::Differential;
  } else if (kind == "difference") {
    spec.kind = SettingKind::Difference;
  } else {
    invalid("setting.kind", "expected \"differential\" or \"difference\"");
  }
  if (!j.contains("matrix")) invalid("matrix", "missing");
  spec.matrix = string_matrix(j["matrix"], "matrix");
  if (j.contains("ideal")) spec.ideal = string_list(j["ideal"], "ideal");
  if (j.contains("subring")) spec.subring = string_list(j["subring"], "subring");
  if (j.contains("subhopf")) spec.subhopf = string_list(j["subhopf"], "subhopf");
  if (j.contains("subring_module")) spec.subring_module = string_matrix(j["subring_module"], "subring_module");
  if (j.contains("bounds")) {
    const Json& b = j["bounds"];
    if (!b.is_object()) invalid("bounds", "expected an object");
    for (const auto& [key, value] : b.items())
      if (key != "degree" && key != "samples" && key != "seed") invalid("bounds." + key, "unknown field");
    if (b.contains("degree")) spec.bounds.degree = static_cast<int>(positive(b["degree"], "bounds.degree", 1));
    if (b.contains("samples")) spec.bounds.samples = static_cast<int>(positive(b["samples"], "bounds.samples", 1));
    if (b.contains("seed")) spec.bounds.seed = static_cast<std::uint64_t>(positive(b["seed"], "bounds.seed", 0));
  }
  if (j.contains("simplicity_degree"))
    spec.simplicity_degree = static_cast<int>(positive(j["simplicity_degree"], "simplicity_degree", 1));
  if (j.contains("constants_extension")) {
    const Json& c = j["constants_extension"];
    if (!c.is_object() || !c.contains("generator") || !c.contains("min_poly") || !c["generator"].is_string() ||
        !c["min_poly"].is_string())
      invalid("constants_extension", "expected {\"generator\": string, \"min_poly\": string}");
    spec.constants_extension = ConstantsExtension{c["generator"].get<std::string>(), c["min_poly"].get<std::string>()};
  }

  // Every string must parse in its ring; the module must be admissible.
  FieldPtr field;
  Setting s = [&] {
    try {
      return setting_of(spec, &field);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotAFieldExtension) throw;
      invalid("constants_extension", e.what());
    }
  }();
  module_from(s, spec.matrix, "matrix");
  if (spec.subring_module) module_from(s, *spec.subring_module, "subring_module");
  auto ring = PolyRing::make(universal_variables(spec.rank()));
  if (spec.ideal) polys_from(*spec.ideal, ring, field, "ideal");
  if (spec.subring) polys_from(*spec.subring, ring, field, "subring");
  if (spec.subhopf) polys_from(*spec.subhopf, hopf_names_ring(spec.rank()), field, "subhopf");
  return spec;
}

SpecDocument parse_spec(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "malformed JSON at " + describe_position(text, e.byte));
  }
  return spec_from_json(j);
}

Json spec_to_json(const SpecDocument& spec) {
  Json j;
  j["name"] = spec.name;
  j["setting"] = {{"kind", spec.kind == SettingKind::Differential ? "differential" : "difference"}};
  j["matrix"] = spec.matrix;
  if (spec.ideal) j["ideal"] = *spec.ideal;
  if (spec.subring) j["subring"] = *spec.subring;
  if (spec.subhopf) j["subhopf"] = *spec.subhopf;
  if (spec.subring_module) j["subring_module"] = *spec.subring_module;
  j["bounds"] = {{"degree", spec.bounds.degree}, {"samples", spec.bounds.samples}, {"seed", spec.bounds.seed}};
  if (spec.simplicity_degree) j["simplicity_degree"] = *spec.simplicity_degree;
  if (spec.constants_extension)
    j["constants_extension"] = {{"generator", spec.constants_extension->generator},
                                {"min_poly", spec.constants_extension->min_poly}};
  return j;
}

std::string serialize_spec(const SpecDocument& spec) { return spec_to_json(spec).dump(2) + "\n"; }

const std::vector<Stage>& all_stages() {
  static const std::vector<Stage> s{Stage::Universal, Stage::Quotient, Stage::PV,
                                    Stage::Hopf,      Stage::Group,    Stage::Correspondence};
  return s;
}

std::string to_string(Stage s) {
  switch (s) {
    case Stage::Universal: return "universal";
    case Stage::Quotient: return "quotient";
    case Stage::PV: return "pv";
    case Stage::Hopf: return "hopf";
    case Stage::Group: return "group";
    case Stage::Correspondence: return "correspondence";
  }
  return "?";
}

Stage parse_stage(const std::string& name) {
  for (Stage s : all_stages())
    if (to_string(s) == name) return s;
  throw Error(ErrorKind::ParseError, "unknown stage '" + name + "'");
}

std::vector<Stage> parse_stages(const std::string& list) {
  std::vector<Stage> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(parse_stage(item));
  return out;
}

std::vector<Stage> default_stages(const SpecDocument& spec) {
  std::vector<Stage> out{Stage::Universal};
  if (spec.ideal) out.push_back(Stage::Quotient);
  out.insert(out.end(), {Stage::PV, Stage::Hopf, Stage::Group});
  if (spec.subring || spec.subhopf) out.push_back(Stage::Correspondence);
  return out;
}

namespace {

std::vector<Stage> prerequisites(Stage s, const SpecDocument& spec) {
  switch (s) {
    case Stage::Universal: return {};
    case Stage::Quotient: return {Stage::Universal};
    case Stage::PV:
      if (spec.ideal) return {Stage::Quotient};
      return {Stage::Universal};
    case Stage::Hopf: return {Stage::PV};
    case Stage::Group: return {Stage::Hopf};
    case Stage::Correspondence: return {Stage::Hopf};
  }
  return {};
}

void check_stage_order(const SpecDocument& spec, const std::vector<Stage>& stages) {
  const std::set<Stage> requested(stages.begin(), stages.end());
  if (requested.empty()) throw Error(ErrorKind::StageOrderError, "no stages requested");
  if (requested.count(Stage::Quotient) && !spec.ideal)
    throw Error(ErrorKind::StageOrderError, "stage quotient requested but the spec supplies no ideal generators");
  if (requested.count(Stage::Correspondence) && !spec.subring && !spec.subhopf)
    throw Error(ErrorKind::StageOrderError, "stage correspondence requested but the spec supplies no subring or subhopf");
  for (Stage s : requested)
    for (Stage p : prerequisites(s, spec))
      if (!requested.count(p))
        throw Error(ErrorKind::StageOrderError, "stage " + to_string(s) + " requires stage " + to_string(p));
}

std::string constants_name(const Setting& s) { return base_constants(s).name(); }

Json ring_json(const OperatorAlgebra& alg) {
  Json j;
  j["variables"] = alg.ring()->variables();
  j["relations"] = strings(alg.relations().basis());
  Json op = Json::object();
  for (std::size_t v = 0; v < alg.ring()->size(); ++v) op[alg.ring()->variables()[v]] = alg.action()[v].to_string();
  j["operator"] = op;
  return j;
}

Json hopf_json(const HopfPresentation& h) {
  Json j;
  j["generators"] = h.ring->variables();
  j["relations"] = strings(h.relations.basis());
  Json delta = Json::object(), counit = Json::object(), antipode = Json::object();
  for (std::size_t v = 0; v < h.ring->size(); ++v) {
    const std::string& g = h.ring->variables()[v];
    delta[g] = h.comultiplication[v].to_string();
    counit[g] = h.counit[v].to_string();
    antipode[g] = h.antipode[v].to_string();
  }
  j["comultiplication"] = delta;
  j["counit"] = counit;
  j["antipode"] = antipode;
  return j;
}

Json pv_json(const PVReport& r, const PVOptions& o) {
  Json j;
  j["solution_ring"] = {{"holds", r.solution_ring.holds}, {"method", r.solution_ring.method}, {"exact", true}};
  Json simp;
  simp["status"] = to_string(r.simplicity.status);
  simp["exact"] = r.simplicity.status == SimplicityStatus::Refuted;
  simp["degree_bound"] = r.simplicity.degree_bound;
  simp["samples"] = r.simplicity.samples;
  simp["seed"] = r.simplicity.seed;
  simp["candidates_tested"] = r.simplicity.candidates_tested;
  if (r.simplicity.witness) {
    simp["witness"] = r.simplicity.witness->to_string();
    simp["witness_ideal"] = strings(r.simplicity.witness_ideal);
  }
  if (!r.simplicity.note.empty()) simp["note"] = r.simplicity.note;
  j["simplicity"] = simp;
  Json cons;
  cons["equals_k"] = r.constants.equals_k;
  cons["description"] = r.constants.description;
  cons["degree_bound"] = o.degree_bound;
  cons["basis"] = strings(r.constants.basis);
  j["constants"] = cons;
  j["minimality"] = {{"holds", r.minimal}, {"method", r.minimality_method}, {"exact", true}};
  return j;
}

struct Context {
  const SpecDocument& spec;
  Setting setting;
  FieldPtr field;
  CModule module;
  std::optional<SolutionRing> universal, ring;
  std::optional<PVReport> verdict;
  std::optional<HopfPresentation> hopf;
  PVOptions options;
};

Json run_stage(Stage s, Context& c) {
  Json j;
  switch (s) {
    case Stage::Universal: {
      c.universal = universal_solution_ring(c.module);
      j = ring_json(c.universal->algebra);
      const bool eq = fundamental_equation_holds(*c.universal), det = unit_determinant_holds(*c.universal);
      j["checks"] = {{"fundamental equation", eq}, {"unit determinant", det}};
      j["exact"] = true;
      j["status"] = eq && det ? "pass" : "fail";
      if (!c.spec.ideal) c.ring = c.universal;
      break;
    }
    case Stage::Quotient: {
      auto gens = polys_from(*c.spec.ideal, c.universal->algebra.ring(), c.field, "ideal");
      c.ring = quotient_ring(*c.universal, gens);
      j = ring_json(c.ring->algebra);
      const bool stable = verify_operator_stable(c.universal->algebra, c.ring->algebra.relations());
      j["checks"] = {{"operator stable", stable}, {"proper", !c.ring->algebra.relations().is_unit()}};
      j["exact"] = true;
      j["status"] = stable ? "pass" : "fail";
      break;
    }
    case Stage::PV: {
      c.verdict = pv_verify(*c.ring, c.module, c.options);
      j = pv_json(*c.verdict, c.options);
      j["status"] = c.verdict->is_pv() ? "pass" : "fail";
      break;
    }
    case Stage::Hopf: {
      c.hopf = compute_H(*c.ring, *c.verdict, c.spec.bounds.degree);
      j = hopf_json(*c.hopf);
      j["method"] = "elimination of the ring variables from the entries of Z";
      j["exact"] = true;
      const auto axioms = verify_hopf_axioms(*c.hopf);
      const auto consistency = ring_structure_consistency(*c.ring, *c.hopf, *c.verdict);
      const auto torsor = torsor_check(*c.ring, *c.hopf, *c.verdict);
      j["axioms"] = checks_json(axioms);
      j["ring_consistency"] = checks_json(consistency);
      j["torsor"] = checks_json(torsor.checks);
      j["status"] = axioms.all() && consistency.all() && torsor.holds ? "pass" : "fail";
      break;
    }
    case Stage::Group: {
      const auto g = identify_group(*c.hopf);
      j["name"] = g.name;
      j["dimension"] = g.dimension;
      j["witness"] = g.witness;
      j["identified"] = g.identified;
      j["represents"] = "Spec H is the Galois group scheme; H also represents the tensor automorphisms of the fibre functor";
      j["convention"] = "right coaction: delta(X) = X Z, Delta(Z) = Z (x) Z";
      j["exact"] = true;
      j["status"] = g.identified ? "pass" : "fail";
      break;
    }
    case Stage::Correspondence: {
      const auto& alg = c.ring->algebra;
      const int bound = c.spec.bounds.degree;
      bool ok = true;
      if (c.spec.subring) {
        auto t = polys_from(*c.spec.subring, alg.ring(), c.field, "subring");
        std::optional<CModule> tm;
        if (c.spec.subring_module) tm = module_from(c.setting, *c.spec.subring_module, "subring_module");
        const auto rep = correspondence_roundtrip(*c.ring, *c.hopf, *c.verdict, t, bound, tm, c.options);
        Json r;
        r["subring"] = strings(t);
        r["sub_hopf"] = strings(rep.sub_hopf);
        r["ideal"] = strings(rep.ideal.basis());
        r["invariants"] = strings(rep.invariants.generators);
        r["invariant_relations"] = strings(rep.invariants.algebra.relations().basis());
        r["subring_roundtrip"] = rep.subring_roundtrip;
        r["ideal_roundtrip"] = rep.ideal_roundtrip;
        ok = ok && rep.subring_roundtrip && rep.ideal_roundtrip;
        if (rep.subring_pv) {
          r["subring_pv"] = pv_json(*rep.subring_pv, c.options);
          r["subring_is_pv"] = rep.subring_pv->is_pv();
          ok = ok && rep.subring_pv->is_pv();
        }
        j["from_subring"] = r;
      }
      if (c.spec.subhopf) {
        auto hp = polys_from(*c.spec.subhopf, c.hopf->ring, c.field, "subhopf");
        const IdealGB ideal = sub_hopf_to_normal_ideal(hp, *c.hopf);
        const auto inv = invariant_ring(*c.ring, *c.hopf, *c.verdict, ideal, bound);
        const auto back = sub_hopf_of_subring(*c.ring, *c.hopf, *c.verdict, inv.generators);
        const bool rt = ideal_equal(sub_hopf_to_normal_ideal(back, *c.hopf), ideal);
        Json r;
        r["sub_hopf"] = strings(hp);
        r["ideal"] = strings(ideal.basis());
        r["invariants"] = strings(inv.generators);
        r["ideal_roundtrip"] = rt;
        ok = ok && rt;
        j["from_subhopf"] = r;
      }
      j["degree_bound"] = bound;
      j["exact"] = true;
      j["status"] = ok ? "pass" : "fail";
      break;
    }
  }
  return j;
}

}  // namespace

std::string Report::text() const { return document.dump(2) + "\n"; }

Report run_pipeline(const SpecDocument& spec, const std::vector<Stage>& stages, const PipelineOptions& options) {
  check_stage_order(spec, stages);
  const std::set<Stage> requested(stages.begin(), stages.end());
  Report report;
  Json& doc = report.document;
  doc["name"] = spec.name;
  doc["setting"] = spec.kind == SettingKind::Differential ? "differential" : "difference";
  doc["rank"] = spec.rank();
  doc["bounds"] = {{"degree", spec.bounds.degree},
                   {"samples", spec.bounds.samples},
                   {"seed", spec.bounds.seed},
                   {"simplicity_degree", spec.simplicity_degree.value_or(PVOptions{}.simplicity_degree)}};
  Json names = Json::array();
  for (Stage s : all_stages())
    if (requested.count(s)) names.push_back(to_string(s));
  doc["stages_requested"] = names;

  FieldPtr field;
  Setting setting = setting_of(spec, &field);
  doc["constants_field"] = constants_name(setting);
  Context c{spec, setting, field, module_from(setting, spec.matrix, "matrix"), {}, {}, {}, {}, {}};
  c.options.degree_bound = spec.bounds.degree;
  c.options.samples = spec.bounds.samples;
  c.options.seed = spec.bounds.seed;
  if (spec.simplicity_degree) c.options.simplicity_degree = *spec.simplicity_degree;

  Json out = Json::object();
  std::optional<std::string> halted;
  bool all_pass = true;
  for (Stage s : all_stages()) {
    if (!requested.count(s)) continue;
    Json j;
    if (halted) {
      j["status"] = "not run";
      j["cause"] = *halted;
      all_pass = false;
      out[to_string(s)] = j;
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
      j = run_stage(s, c);
    } catch (const Error& e) {
      j = Json::object();
      j["status"] = "error";
      j["error"] = to_string(e.kind());
      j["cause"] = e.what();
    }
    if (options.timing)
      j["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = j["status"] == "pass";
    all_pass = all_pass && pass;
    // The group stage only describes H; a failed identification does not invalidate later stages.
    if (!pass && s != Stage::Group) halted = "stage " + to_string(s) + " did not pass";
    out[to_string(s)] = j;
  }
  doc["stages"] = out;

  Json caveats = Json::array();
  if (requested.count(Stage::PV)) {
    caveats.push_back("simplicity passed_bounded is evidence up to degree " + std::to_string(c.options.simplicity_degree) +
                      " with " + std::to_string(c.options.samples) + " samples (seed " + std::to_string(c.options.seed) +
                      "), not a proof");
    caveats.push_back("constants are computed among elements of degree at most " + std::to_string(c.options.degree_bound));
  }
  if (requested.count(Stage::Correspondence))
    caveats.push_back("invariant rings are searched among elements of degree at most " +
                      std::to_string(spec.bounds.degree));
  doc["caveats"] = caveats;
  doc["passed"] = all_pass;
  report.passed = all_pass;
  return report;
}

std::string summarize(const Json& report) {
  std::ostringstream out;
  out << report["name"].get<std::string>() << " (" << report["setting"].get<std::string>() << ", rank "
      << report["rank"].get<std::size_t>() << ", constants " << report["constants_field"].get<std::string>() << ")\n";
  for (const auto& [name, stage] : report["stages"].items()) {
    out << "  " << name << ": " << stage["status"].get<std::string>();
    if (stage.contains("cause")) out << " (" << stage["cause"].get<std::string>() << ")";
    if (name == "pv" && stage.contains("simplicity"))
      out << ", simplicity " << stage["simplicity"]["status"].get<std::string>() << ", constants "
          << stage["constants"]["description"].get<std::string>();
    if (name == "hopf" && stage.contains("relations")) {
      out << ", relations [";
      bool first = true;
      for (const auto& r : stage["relations"]) {
        out << (first ? "" : ", ") << r.get<std::string>();
        first = false;
      }
      out << "]";
    }
    if (name == "group" && stage.contains("name"))
      out << ", " << stage["name"].get<std::string>() << " of dimension " << stage["dimension"].get<int>();
    out << "\n";
  }
  out << "  overall: " << (report["passed"].get<bool>() ? "pass" : "fail") << "\n";
  return out.str();
}

const std::vector<SpecDocument>& catalog() {
  static const std::vector<SpecDocument> entries = [] {
    std::vector<SpecDocument> xs;
    auto add = [&](std::string name, SettingKind kind, std::vector<std::vector<std::string>> m,
                   std::optional<std::vector<std::string>> ideal) {
      SpecDocument s;
      s.name = std::move(name);
      s.kind = kind;
      s.matrix = std::move(m);
      s.ideal = std::move(ideal);
      xs.push_back(std::move(s));
      return &xs.back();
    };
    auto* exp = add("exp", SettingKind::Differential, {{"1"}}, std::nullopt);
    exp->subring = std::vector<std::string>{"x11^2", "d^2"};
    exp->subring_module = std::vector<std::vector<std::string>>{{"2"}};
    exp->subhopf = std::vector<std::string>{"z11^2", "w^2"};
    add("log", SettingKind::Differential, {{"0", "1/t"}, {"0", "0"}}, std::vector<std::string>{"x11-1", "x21", "x22-1"});
    add("sqrt", SettingKind::Differential, {{"1/(2*t)"}}, std::vector<std::string>{"x11^2-t"});
    add("sqrt-neg", SettingKind::Differential, {{"1/(2*t)"}}, std::vector<std::string>{"x11^2+t"});
    add("circle", SettingKind::Differential, {{"0", "1"}, {"-1", "0"}},
        std::vector<std::string>{"x11-x22", "x12+x21", "x11^2+x12^2-1"});
    add("difference-sign", SettingKind::Difference, {{"-1"}}, std::vector<std::string>{"x11^2-1"});
    return xs;
  }();
  return entries;
}

}  // namespace pv
