#include "patrep/report.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "patrep/coadjoint.hpp"
#include "patrep/degq.hpp"
#include "patrep/error.hpp"
#include "patrep/fourpart.hpp"
#include "patrep/induce.hpp"
#include "patrep/inducible.hpp"
#include "patrep/oracle.hpp"
#include "patrep/parallel.hpp"
#include "patrep/polarize.hpp"

namespace patrep {

using nlohmann::json;

namespace {

json codes(std::span<const Fq> v) {
  json a = json::array();
  for (Fq x : v) a.push_back(x.v);
  return a;
}

std::string root_text(const Root& r) { return "(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")"; }

json group_json(const PatternGroup& G) {
  json roots = json::array();
  for (const Root& r : G.roots().roots()) roots.push_back(root_text(r));
  return {{"n", G.n()},
          {"q", G.q()},
          {"field", G.field().describe()},
          {"roots", roots},
          {"dim", G.dim()},
          {"order", G.order()}};
}

json subalgebra_json(const PatternGroup& G, const Subalgebra& b) {
  json j = {{"dim", b.dim()}, {"pattern", b.pattern}, {"mult_closed", b.mult_closed}};
  if (b.pattern) {
    json roots = json::array();
    for (int r : b.roots) roots.push_back(root_text(G.roots()[static_cast<std::size_t>(r)]));
    j["roots"] = roots;
  } else {
    json basis = json::array();
    for (std::size_t r = 0; r < b.dim(); ++r) basis.push_back(codes(b.space.basis().row(r)));
    j["basis"] = basis;
  }
  return j;
}

json values_json(const Character& c) {
  json a = json::array();
  for (const auto& v : c.values) a.push_back(v.to_string());
  return a;
}

json check(const std::string& claim, bool ok) { return {{"claim", claim}, {"ok", ok}}; }

bool all_ok(const json& checks) {
  for (const auto& c : checks)
    if (!c.at("ok").get<bool>()) return false;
  return true;
}

Limits single_threaded(const Limits& l) {
  Limits inner = l;
  inner.threads = 1;
  return inner;
}

struct Classified {
  ClassContext ctx;
  GoodTypeReport cert;
  std::vector<std::optional<Character>> chars;
  std::vector<std::int64_t> norms;
};

Classified classify_group(const PatternGroup& G, const Limits& limits) {
  Classified c{ClassContext::build(G, limits), certify_good_type(G, default_strategies(G), limits), {}, {}};
  c.chars.resize(c.cert.entries.size());
  c.norms.assign(c.cert.entries.size(), 0);
  const Limits inner = single_threaded(limits);
  parallel_for(c.cert.entries.size(), limits.threads, [&](std::size_t k) {
    const auto& e = c.cert.entries[k];
    if (!e.polarization) return;
    c.chars[k] = induced_character(c.ctx, e.representative, *e.polarization, PolarizationGroup::Associative, inner);
    c.norms[k] = inner_product(c.ctx, *c.chars[k], *c.chars[k]);
  });
  return c;
}

Report classification_report(const PatternGroup& G, const ReportOptions& opt, bool with_values) {
  const Classified c = classify_group(G, opt.limits);
  Report r;
  json orbits = json::array();
  std::set<std::vector<CycloValue>> distinct;
  std::uint64_t deg2 = 0;
  bool irreducible = true;
  for (std::size_t k = 0; k < c.cert.entries.size(); ++k) {
    const auto& e = c.cert.entries[k];
    json o = {{"representative", codes(e.representative.coords)}, {"orbit_size", e.orbit_size}};
    if (e.polarization) {
      o["strategy"] = to_string(*e.strategy);
      o["polarization"] = subalgebra_json(G, *e.polarization);
      const Character& ch = *c.chars[k];
      o["degree"] = ch.degree();
      o["norm"] = c.norms[k];
      if (with_values) o["values"] = values_json(ch);
      distinct.insert(ch.values);
      deg2 += static_cast<std::uint64_t>(ch.degree() * ch.degree());
      irreducible &= c.norms[k] == 1;
    } else {
      o["polarization"] = "INCONCLUSIVE";
    }
    orbits.push_back(o);
  }
  json checks = json::array();
  checks.push_back(check("every orbit has an associative polarization", c.cert.certified));
  checks.push_back(check("every induced character has norm 1", irreducible));
  checks.push_back(check("characters from distinct orbits are distinct",
                         distinct.size() == c.cert.succeeded));
  checks.push_back(check("sum of squared degrees equals |G|", deg2 == c.ctx.classes.group_order));
  checks.push_back(check("number of characters equals number of classes", c.cert.succeeded == c.ctx.count()));
  r.body = {{"group", group_json(G)}, {"orbits", orbits}, {"class_count", c.ctx.count()}, {"checks", checks}};
  if (with_values) {
    json classes = json::array();
    for (std::size_t k = 0; k < c.ctx.count(); ++k)
      classes.push_back({{"index", c.ctx.classes.reps[k]},
                         {"representative", codes(G.decode(c.ctx.classes.reps[k]))},
                         {"size", c.ctx.classes.sizes[k]}});
    r.body["classes"] = classes;
  }
  r.pass = all_ok(checks);
  return r;
}

json clifford_json(const CliffordReport& c) {
  json orbits = json::array();
  for (const auto& o : c.orbits)
    orbits.push_back({{"character", o.character},
                      {"orbit_size", o.orbit_size},
                      {"stabilizer_order", o.stabilizer_order},
                      {"stabilizer_classes", o.stabilizer_classes}});
  return {{"dual_size", c.dual_size}, {"orbits", orbits}, {"class_sum", c.class_sum}, {"class_count", c.class_count}};
}

}  // namespace

Report report_orbits(const PatternGroup& G, const ReportOptions& opt) {
  const OrbitPartition part = all_orbits(G, opt.limits);
  json orbits = json::array();
  for (const auto& o : part.orbits)
    orbits.push_back({{"representative", codes(o.representative.coords)}, {"size", o.size}, {"stab_dim", o.stab_dim}});
  return {{{"group", group_json(G)}, {"orbit_count", part.orbits.size()}, {"orbits", orbits}}, true};
}

Report report_classes(const PatternGroup& G, const ReportOptions& opt) {
  const ClassPartition cp = conjugacy_classes(G, opt.limits);
  json classes = json::array();
  for (std::size_t k = 0; k < cp.count(); ++k)
    classes.push_back({{"index", cp.reps[k]}, {"representative", codes(G.decode(cp.reps[k]))}, {"size", cp.sizes[k]}});
  return {{{"group", group_json(G)}, {"class_count", cp.count()}, {"classes", classes}}, true};
}

Report report_classify(const PatternGroup& G, const ReportOptions& opt) {
  return classification_report(G, opt, false);
}

Report report_char_table(const PatternGroup& G, const ReportOptions& opt) {
  return classification_report(G, opt, true);
}

Report report_certify(const PatternGroup& G, const ReportOptions& opt) {
  const GoodTypeReport cert = certify_good_type(G, default_strategies(G), opt.limits);
  json orbits = json::array();
  for (const auto& e : cert.entries) {
    json o = {{"representative", codes(e.representative.coords)}, {"orbit_size", e.orbit_size}};
    if (e.polarization) {
      o["strategy"] = to_string(*e.strategy);
      o["polarization"] = subalgebra_json(G, *e.polarization);
    } else {
      o["polarization"] = "INCONCLUSIVE";
    }
    orbits.push_back(o);
  }
  Report r;
  r.body = {{"group", group_json(G)},
            {"orbits", orbits},
            {"succeeded", cert.succeeded},
            {"status", cert.certified ? "CERTIFIED" : "INCONCLUSIVE"}};
  r.pass = cert.certified;
  return r;
}

Report verify_4parts(const PatternGroup& G, const ReportOptions& opt) {
  const auto parts = detect_fourpart(G.roots());
  if (!parts) throw InvalidInput("verify 4parts needs the radical of a partition into four parts");
  const FourPartClassification c = classify_fourpart(*parts, G.field_ptr(), opt.limits);
  json orbits = json::array();
  for (const auto& e : c.entries) {
    json o = {{"representative", codes(e.representative.coords)},
              {"orbit_size", e.orbit_size},
              {"normalized", codes(e.normalized.to_functional(G).coords)},
              {"ranks", {{"r31", e.r31}, {"r41", e.r41}, {"r42", e.r42}}},
              {"formula_codim", e.formula_codim},
              {"brute_codim", e.brute_codim},
              {"b_T", subalgebra_json(G, e.b)},
              {"polarization", e.verdict.ok}};
    if (!e.verdict.ok) o["reasons"] = e.verdict.reasons;
    else o["degree"] = e.character.degree();
    orbits.push_back(o);
  }
  json checks = json::array();
  checks.push_back(check("every orbit contains a functional with rowspace(T31) and rowspace(T41) meeting in 0 "
                         "and colspace(T42) and colspace(T41) meeting in 0",
                         c.all_normalized));
  checks.push_back(check("stabilizer codimension equals 2(n3 r41 + n2 r41 + n2 r31 + n3 r42 - r31 r42)",
                         c.codim_matches));
  checks.push_back(check("b_T is an associative polarization", c.all_polarizations));
  checks.push_back(check("every induced character is irreducible", c.all_irreducible));
  checks.push_back(check("characters from distinct orbits are distinct", c.pairwise_distinct));
  checks.push_back(check("sum of squared degrees equals |G|", c.degree_sum_ok));
  checks.push_back(check("number of characters equals number of classes", c.count_ok));
  Report r;
  r.body = {{"group", group_json(G)},
            {"partition", c.parts},
            {"orbits", orbits},
            {"class_count", c.class_count},
            {"checks", checks}};
  r.pass = c.pass();
  return r;
}

Report verify_degq(const PatternGroup& G, const ReportOptions& opt) {
  DegqReport d;
  try {
    d = degq_census(G, opt.limits);
  } catch (const ProofCaseViolation& e) {
    // No representative fits the case split. Still compare the plain counts.
    std::uint64_t q2_orbits = 0;
    const std::uint64_t q2 = static_cast<std::uint64_t>(G.q()) * static_cast<std::uint64_t>(G.q());
    for (const auto& o : all_orbits(G, opt.limits).orbits) q2_orbits += o.size == q2;
    const DegreeMultiplicities dm = degree_multiplicities(G, opt.limits);
    const std::uint64_t m1 = dm.m.size() > 1 ? dm.m[1] : 0;
    json checks = json::array();
    checks.push_back(check("every size-q^2 orbit has a representative fitting the one-entry or two-entry case",
                           false));
    checks.push_back(check("number of size-q^2 orbits equals the number of degree-q characters", q2_orbits == m1));
    Report r;
    r.body = {{"group", group_json(G)},
              {"proof_case_violation", e.what()},
              {"q2_orbit_count", q2_orbits},
              {"oracle_m1", m1},
              {"checks", checks}};
    r.pass = false;
    return r;
  }
  json orbits = json::array();
  for (const auto& e : d.entries)
    orbits.push_back({{"orbit_min", codes(e.rep.orbit_min.coords)},
                      {"y", codes(e.rep.y.coords)},
                      {"removed", root_text(e.rep.removed)},
                      {"options", e.rep.options},
                      {"degree", e.degree},
                      {"norm", e.norm},
                      {"choice_independent", e.choice_independent}});
  json checks = json::array();
  checks.push_back(check("each size-q^2 orbit induces an irreducible character of degree q",
                         d.all_degree_q && d.all_irreducible));
  checks.push_back(check("characters from distinct size-q^2 orbits are distinct", d.pairwise_distinct));
  checks.push_back(check("the character does not depend on the chosen representative", d.choice_independent));
  checks.push_back(check("number of degree-q characters equals number of size-q^2 orbits",
                         d.census_count == d.oracle_m1));
  Report r;
  r.body = {{"group", group_json(G)},
            {"q2_orbits", orbits},
            {"census_count", d.census_count},
            {"oracle_m1", d.oracle_m1},
            {"checks", checks}};
  r.pass = d.pass();
  return r;
}

Report verify_sameno(const PatternGroup& G, const ReportOptions& opt) {
  const std::size_t orbits = all_orbits(G, opt.limits).orbits.size();
  const std::size_t classes = conjugacy_classes(G, opt.limits).count();
  json checks = json::array();
  checks.push_back(check("number of coadjoint orbits equals number of conjugacy classes", orbits == classes));
  Report r;
  r.body = {{"group", group_json(G)},
            {"orbits", orbits},
            {"classes", classes},
            {"summary", "orbits=" + std::to_string(orbits) + " classes=" + std::to_string(classes)},
            {"checks", checks}};
  r.pass = orbits == classes;
  return r;
}

Report verify_clifford(const PatternGroup& G, const ReportOptions& opt) {
  const CliffordReport c = clifford_count_check(G, opt.limits);
  json checks = json::array();
  checks.push_back(check("#classes(G) equals the sum over M-orbits on the dual of the last-column subgroup of "
                         "#classes(stabilizer)",
                         c.pass()));
  Report r;
  r.body = clifford_json(c);
  r.body["group"] = group_json(G);
  r.body["checks"] = checks;
  r.pass = c.pass();
  return r;
}

Report verify_inducible(const PatternGroup& G, const ReportOptions& opt) {
  const InducibleSweep s = inducible_sweep(G, opt.samples, opt.seed, opt.limits);
  json checks = json::array();
  checks.push_back(check("every functional has an inducible pair of full u-rank", s.findings == 0));
  Report r;
  r.body = {{"group", group_json(G)},
            {"tested", s.tested},
            {"exhaustive", s.exhaustive},
            {"findings", s.findings},
            {"finding_details", s.finding_details},
            {"checks", checks}};
  if (!s.exhaustive) r.body["seed"] = opt.seed;
  r.pass = s.findings == 0;
  return r;
}

Report verify_polarization_independence(const PatternGroup& G, const ReportOptions& opt) {
  const ClassContext ctx = ClassContext::build(G, opt.limits);
  const OrbitPartition part = all_orbits(G, opt.limits);
  std::size_t count = part.orbits.size();
  if (opt.samples > 0 && opt.samples < count) count = opt.samples;
  std::vector<OrbitMethodReport> reports(count);
  const Limits inner = single_threaded(opt.limits);
  parallel_for(count, opt.limits.threads,
               [&](std::size_t k) { reports[k] = verify_orbit_method(ctx, part.orbits[k].representative, inner); });
  json orbits = json::array();
  bool pass = true;
  std::size_t two = 0;
  for (std::size_t k = 0; k < count; ++k) {
    json checks = json::array();
    for (const auto& c : reports[k].checks) {
      json j = check(c.claim, c.ok);
      if (!c.detail.empty()) j["detail"] = c.detail;
      checks.push_back(j);
      if (c.claim == "two associative polarizations give the same character" &&
          c.detail != "only one polarization exists")
        ++two;
    }
    pass &= reports[k].pass();
    orbits.push_back({{"representative", codes(part.orbits[k].representative.coords)}, {"checks", checks}});
  }
  Report r;
  r.body = {{"group", group_json(G)},
            {"orbits", orbits},
            {"tested", count},
            {"with_two_polarizations", two}};
  r.pass = pass;
  return r;
}

Report verify_lemma_codim(const FieldPtr& field, int max_n, const ReportOptions& opt) {
  const LemmaSweep s = lemma_codim_sweep(field, max_n, opt.samples ? opt.samples : 20, opt.seed);
  json checks = json::array();
  checks.push_back(check("part one codimension equals n3 r42 + n2 r31 - r31 r42, and part two equals "
                         "n2 r41 + n3 r41 + n2 r31 + n3 r42 - r31 r42, by brute force and after reduction",
                         s.mismatches == 0));
  Report r;
  r.body = {{"field", field->describe()},
            {"max_n", max_n},
            {"instances", s.instances},
            {"rank_cases", s.rank_cases},
            {"mismatches", s.mismatches},
            {"mismatch_details", s.mismatch_details},
            {"seed", opt.seed},
            {"checks", checks}};
  r.pass = s.pass();
  return r;
}

Report oracle_degrees(const PatternGroup& G, const ReportOptions& opt) {
  const DegreeMultiplicities d = degree_multiplicities(G, opt.limits);
  json mult = json::array();
  for (std::size_t i = 0; i < d.m.size(); ++i) mult.push_back({{"degree", "q^" + std::to_string(i)}, {"count", d.m[i]}});
  return {{{"group", group_json(G)},
           {"multiplicities", mult},
           {"moments", d.moments},
           {"class_count", d.class_count}},
          true};
}

Report oracle_clifford(const PatternGroup& G, const ReportOptions& opt) {
  const CliffordReport c = clifford_count_check(G, opt.limits);
  Report r;
  r.body = clifford_json(c);
  r.body["group"] = group_json(G);
  r.pass = c.pass();
  return r;
}

std::string render_json(const Report& r) { return r.body.dump(2) + "\n"; }

std::string render_csv(const Report& r) {
  if (!r.body.contains("classes") || !r.body.contains("orbits"))
    throw InvalidInput("CSV output is available for char-table only");
  std::ostringstream out;
  out << "character,degree";
  for (const auto& c : r.body["classes"]) out << ",C" << c["index"].get<std::uint64_t>();
  out << "\n";
  std::size_t k = 0;
  for (const auto& o : r.body["orbits"]) {
    if (!o.contains("values")) {
      ++k;
      continue;
    }
    out << k++ << "," << o["degree"].get<std::int64_t>();
    for (const auto& v : o["values"]) out << ",\"" << v.get<std::string>() << "\"";
    out << "\n";
  }
  return out.str();
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string ResultCache::key(const std::string& canonical_input, const std::string& operation,
                             const std::string& version, const std::string& options) {
  return fnv1a_hex(canonical_input + '\n' + operation + '\n' + version + '\n' + options);
}

std::optional<std::pair<std::string, int>> ResultCache::load(const std::string& key) const {
  std::ifstream in(std::filesystem::path(dir_) / (key + ".json"));
  if (!in) return std::nullopt;
  const json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("output") || !j.contains("exit") ||
      !j["output"].is_string() || !j["exit"].is_number_integer())
    return std::nullopt;
  return std::make_pair(j["output"].get<std::string>(), j["exit"].get<int>());
}

void ResultCache::store(const std::string& key, const std::string& output, int exit_code) const {
  std::filesystem::create_directories(dir_);
  std::ofstream out(std::filesystem::path(dir_) / (key + ".json"), std::ios::trunc);
  out << json{{"exit", exit_code}, {"output", output}}.dump() << "\n";
}

}  // namespace patrep
