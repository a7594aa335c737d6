// Acceptance battery: one PASS/FAIL line per criterion on stdout, failure
// details on stderr. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "patrep/coadjoint.hpp"
#include "patrep/degq.hpp"
#include "patrep/error.hpp"
#include "patrep/fourpart.hpp"
#include "patrep/induce.hpp"
#include "patrep/inducible.hpp"
#include "patrep/oracle.hpp"
#include "patrep/polarize.hpp"
#include "patrep/report.hpp"

using namespace patrep;

namespace {

struct Criterion {
  bool ok = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    ok = false;
    notes.push_back(why);
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

struct GroupCase {
  std::string name;
  std::vector<Root> roots;  // generators of the closed set
  std::vector<int> partition;
  int n = 0;
  int q = 0;

  PatternGroup build() const {
    auto field = Field::of_order(q);
    if (!partition.empty()) return PatternGroup(parabolic_radical(partition), field);
    return PatternGroup(ClosedRootSet::closure(roots, n), field);
  }
};

GroupCase full(int n, int q) {
  std::vector<int> parts(static_cast<std::size_t>(n), 1);
  return {"U" + std::to_string(n) + "(" + std::to_string(q) + ")", {}, parts, n, q};
}

GroupCase radical(std::vector<int> parts, int q) {
  std::string name = "U_{";
  int n = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    name += (i ? "," : "") + std::to_string(parts[i]);
    n += parts[i];
  }
  return {name + "}(" + std::to_string(q) + ")", {}, parts, n, q};
}

GroupCase closed(std::string name, std::vector<Root> roots, int n, int q) {
  return {name + "(" + std::to_string(q) + ")", roots, {}, n, q};
}

// True when D equals the radical of some composition of n.
bool is_parabolic(const ClosedRootSet& d) {
  const int n = d.n();
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts{1};
    for (int k = 0; k < n - 1; ++k) {
      if (mask & (1u << k)) parts.back()++;
      else parts.push_back(1);
    }
    if (parabolic_radical(parts).roots() == d.roots()) return true;
  }
  return false;
}

// Characters for every orbit, through the certified polarizations.
struct Classification {
  std::vector<std::int64_t> degrees;
  bool irreducible = true;
  bool distinct = true;
  std::size_t orbits = 0;
};

Classification classify(const PatternGroup& G, const Limits& limits) {
  const auto ctx = ClassContext::build(G, limits);
  const auto cert = certify_good_type(G, default_strategies(G), limits);
  if (!cert.certified) throw ConstructionFailed("certification incomplete on " + G.describe());
  Classification c;
  c.orbits = cert.entries.size();
  std::set<std::vector<CycloValue>> seen;
  for (const auto& e : cert.entries) {
    const Character ch = induced_character(ctx, e.representative, *e.polarization, PolarizationGroup::Associative, limits);
    c.degrees.push_back(ch.degree());
    c.irreducible &= inner_product(ctx, ch, ch) == 1;
    seen.insert(ch.values);
  }
  c.distinct = seen.size() == cert.entries.size();
  return c;
}

Criterion heisenberg_battery(const Limits& limits) {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  for (int q : {2, 3, 5}) {
    const PatternGroup G = full(3, q).build();
    const Classification cl = classify(G, limits);
    const std::int64_t qq = q;
    std::size_t linear = 0, big = 0;
    std::int64_t sum = 0;
    for (auto d : cl.degrees) {
      linear += d == 1;
      big += d == qq;
      sum += d * d;
    }
    const std::string tag = "q=" + std::to_string(q) + ": ";
    c.expect(cl.degrees.size() == static_cast<std::size_t>(qq * qq + qq - 1), tag + "character count");
    c.expect(linear == static_cast<std::size_t>(qq * qq), tag + "linear character count");
    c.expect(big == static_cast<std::size_t>(qq - 1), tag + "degree-q character count");
    c.expect(sum == qq * qq * qq, tag + "sum of squared degrees");
    c.expect(cl.irreducible && cl.distinct, tag + "irreducible and distinct");
    c.expect(all_orbits(G, limits).orbits.size() == conjugacy_classes(G, limits).count(), tag + "orbits vs classes");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 5.0, "runtime " + std::to_string(secs) + " s");
  return c;
}

Criterion fourpart_suite(const Limits& limits) {
  Criterion c;
  const std::vector<std::vector<int>> parts{{1, 1, 1, 1}, {2, 1, 1, 1}, {1, 2, 1, 1}, {1, 1, 2, 1},
                                            {1, 1, 1, 2}, {2, 2, 1, 1}, {1, 2, 2, 1}};
  std::size_t ran = 0;
  for (const auto& p : parts)
    for (int q : {2, 3}) {
      const GroupCase gc = radical(p, q);
      const PatternGroup G = gc.build();
      if (G.order() > (std::uint64_t{1} << 16)) continue;
      const auto r = classify_fourpart(p, G.field_ptr(), limits);
      ++ran;
      c.expect(r.all_normalized, gc.name + ": normalization");
      c.expect(r.codim_matches, gc.name + ": codimension formula");
      c.expect(r.all_polarizations, gc.name + ": b_T polarization");
      c.expect(r.all_irreducible && r.pairwise_distinct && r.degree_sum_ok && r.count_ok,
               gc.name + ": completeness");
    }
  c.expect(ran >= 10, "only " + std::to_string(ran) + " groups within the cap");
  return c;
}

Criterion lemma_sweeps() {
  Criterion c;
  for (int q : {2, 3}) {
    const auto s = lemma_codim_sweep(Field::of_order(q), 3, 20, 2024);
    c.expect(s.pass(), "q=" + std::to_string(q) + ": " + std::to_string(s.mismatches) + " mismatches");
    for (const auto& d : s.mismatch_details) c.notes.push_back(d);
  }
  return c;
}

std::vector<GroupCase> degq_battery() {
  return {full(3, 2),
          full(3, 3),
          full(4, 2),
          full(4, 3),
          full(5, 2),
          radical({1, 2, 1}, 2),
          radical({1, 2, 1}, 3),
          closed("D4a", {{1, 2}, {2, 3}, {1, 4}}, 4, 2),
          closed("D4a", {{1, 2}, {2, 3}, {1, 4}}, 4, 3),
          closed("D4b", {{2, 3}, {3, 4}, {1, 4}}, 4, 3),
          closed("D4c", {{1, 2}, {2, 4}, {3, 4}}, 4, 3),
          closed("D5a", {{1, 2}, {2, 3}, {3, 5}, {4, 5}}, 5, 2),
          closed("D5b", {{1, 2}, {2, 4}, {3, 4}, {4, 5}}, 5, 2)};
}

Criterion degq_census_check(const Limits& limits) {
  Criterion c;
  std::size_t groups = 0, non_parabolic = 0;
  for (const auto& gc : degq_battery()) {
    const PatternGroup G = gc.build();
    try {
      const auto r = degq_census(G, limits);
      c.expect(r.pass(), gc.name + ": census " + std::to_string(r.census_count) + " vs oracle " +
                             std::to_string(r.oracle_m1));
    } catch (const ProofCaseViolation& e) {
      c.fail(gc.name + ": " + e.what());
      const auto body = verify_degq(G, ReportOptions{limits, 0, 1}).body;
      c.notes.push_back(gc.name + ": size-q^2 orbits " + body["q2_orbit_count"].dump() + ", oracle m1 " +
                        body["oracle_m1"].dump());
    } catch (const Error& e) {
      c.fail(gc.name + ": " + e.what());
    }
    ++groups;
    non_parabolic += !is_parabolic(G.roots());
  }
  c.expect(groups >= 10, "fewer than 10 groups");
  c.expect(non_parabolic >= 3, "fewer than 3 non-parabolic closed sets");
  return c;
}

Criterion polarization_independence(const Limits& limits) {
  Criterion c;
  std::size_t two = 0;
  for (const auto& gc : {full(3, 2), full(3, 3), full(4, 2), full(4, 3), radical({1, 2, 1}, 3)}) {
    const PatternGroup G = gc.build();
    const auto ctx = ClassContext::build(G, limits);
    for (const auto& o : all_orbits(G, limits).orbits) {
      const auto r = verify_orbit_method(ctx, o.representative, limits);
      for (const auto& k : r.checks) {
        if (!k.ok) c.fail(gc.name + ": " + k.claim + " (" + k.detail + ")");
        if (k.claim == "two associative polarizations give the same character" &&
            k.detail != "only one polarization exists")
          ++two;
      }
    }
  }
  c.expect(two >= 5, "only " + std::to_string(two) + " functionals with two polarizations");
  return c;
}

Criterion exponential_suite(Limits limits) {
  Criterion c;
  limits.group_cap = std::uint64_t{1} << 17;
  for (int n : {3, 4})
    for (int q : {5, 7}) {
      const PatternGroup G = full(n, q).build();
      const std::string tag = "U" + std::to_string(n) + "(" + std::to_string(q) + "): ";
      bool inverse = true;
      for (std::uint64_t i = 0; i < G.order(); ++i) {
        const AlgebraElement x{G.decode(i)};
        const GroupElement g{G.decode(i)};
        inverse &= log_map(G, exp_map(G, x)) == x && exp_map(G, log_map(G, g)) == g;
      }
      c.expect(inverse, tag + "exp and log are not inverse");

      const auto ctx = ClassContext::build(G, limits);
      for (const auto& o : all_orbits(G, limits).orbits) {
        const Functional& t = o.representative;
        const auto lie = find_lie_polarization(G, t, true, limits);
        const auto assoc = find_associative_polarization(G, t, Strategy::Pattern, limits);
        if (!lie || !assoc) {
          c.fail(tag + "missing polarization");
          continue;
        }
        const auto fiber = l_fiber(G, t, *lie, PolarizationGroup::Exponential);
        const auto porb = polarization_group_orbit(G, t, *lie, PolarizationGroup::Exponential, limits);
        c.expect(fiber.size() * fiber.size() == o.size, tag + "|L|^2 != |O|");
        c.expect(fiber == porb, tag + "L != Ad*_P lambda");
        c.expect(induced_character(ctx, t, *lie, PolarizationGroup::Exponential, limits) ==
                     induced_character(ctx, t, *assoc, PolarizationGroup::Associative, limits),
                 tag + "exp and associative characters differ");
      }
    }
  return c;
}

std::vector<GroupCase> battery() {
  std::vector<GroupCase> out{full(3, 2), full(3, 3), full(3, 5), full(4, 2), full(4, 3), full(5, 2),
                             closed("abelian", {{1, 3}, {2, 3}}, 3, 3)};
  for (const auto& p : std::vector<std::vector<int>>{{1, 1, 1, 1}, {2, 1, 1, 1}, {1, 2, 1, 1}, {1, 1, 2, 1},
                                                     {1, 1, 1, 2}, {2, 2, 1, 1}, {1, 2, 2, 1}, {1, 2, 1}})
    for (int q : {2, 3}) {
      const GroupCase gc = radical(p, q);
      if (gc.build().order() <= (std::uint64_t{1} << 16)) out.push_back(gc);
    }
  for (const auto& gc : degq_battery())
    if (!gc.partition.size()) out.push_back(gc);
  return out;
}

Criterion counting_identities(const Limits& limits) {
  Criterion c;
  for (const auto& gc : battery()) {
    const PatternGroup G = gc.build();
    const std::size_t orbits = all_orbits(G, limits).orbits.size();
    const std::size_t classes = conjugacy_classes(G, limits).count();
    c.expect(orbits == classes, gc.name + ": orbits " + std::to_string(orbits) + " vs classes " +
                                    std::to_string(classes));
    const auto cl = clifford_count_check(G, limits);
    c.expect(cl.pass(), gc.name + ": Clifford sum " + std::to_string(cl.class_sum) + " vs " +
                            std::to_string(cl.class_count));
  }
  return c;
}

Criterion inducible_pairs(const Limits& limits) {
  Criterion c;
  std::uint64_t findings = 0;
  auto note = [&](const std::string& name, const InducibleSweep& s) {
    findings += s.findings;
    for (const auto& d : s.finding_details) c.notes.push_back(name + ": " + d);
  };
  for (const auto& gc : {full(3, 2), full(4, 2), closed("D4p", {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}}, 4, 2)}) {
    const auto s = inducible_sweep(gc.build(), 0, 1, limits);
    c.expect(s.exhaustive, gc.name + ": sweep was not exhaustive");
    note(gc.name, s);
  }
  std::uint64_t random = 0;
  for (const auto& gc : {full(4, 3), full(5, 3), full(6, 3), closed("D5a", {{1, 2}, {2, 3}, {3, 5}, {4, 5}}, 5, 3)}) {
    const auto s = inducible_sweep(gc.build(), 200, 77, limits);
    random += s.tested;
    note(gc.name, s);
  }
  c.expect(random >= 200, "too few random samples");
  c.expect(findings == 0, std::to_string(findings) + " findings");
  return c;
}

Criterion determinism() {
  Criterion c;
  struct Job {
    std::string name;
    std::function<Report(const ReportOptions&)> run;
  };
  const PatternGroup u4 = full(4, 3).build();
  const PatternGroup f4 = radical({1, 1, 2, 1}, 2).build();
  const PatternGroup u5 = full(5, 3).build();
  const PatternGroup h3 = full(3, 3).build();
  const std::vector<Job> jobs{
      {"char-table", [&](const ReportOptions& o) { return report_char_table(u4, o); }},
      {"certify", [&](const ReportOptions& o) { return report_certify(u4, o); }},
      {"orbits", [&](const ReportOptions& o) { return report_orbits(u4, o); }},
      {"4parts", [&](const ReportOptions& o) { return verify_4parts(f4, o); }},
      {"degq", [&](const ReportOptions& o) { return verify_degq(u4, o); }},
      {"inducible", [&](const ReportOptions& o) {
         ReportOptions r = o;
         r.samples = 100;
         return verify_inducible(u5, r);
       }},
      {"polarization-independence", [&](const ReportOptions& o) { return verify_polarization_independence(h3, o); }},
      {"clifford", [&](const ReportOptions& o) { return verify_clifford(u4, o); }},
      {"degrees", [&](const ReportOptions& o) { return oracle_degrees(u4, o); }},
      {"lemma-codim", [&](const ReportOptions& o) {
         ReportOptions r = o;
         r.samples = 3;
         return verify_lemma_codim(Field::of_order(3), 3, r);
       }},
  };
  for (const auto& job : jobs) {
    ReportOptions one, four;
    four.limits.threads = 4;
    const std::string a = render_json(job.run(one));
    const std::string b = render_json(job.run(one));
    const std::string d = render_json(job.run(four));
    c.expect(a == b, job.name + ": repeated runs differ");
    c.expect(a == d, job.name + ": threads 1 and 4 differ");
  }
  return c;
}

}  // namespace

int main() {
  Limits limits;
  limits.threads = 1;
  const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria{
      {"Heisenberg battery", [&] { return heisenberg_battery(limits); }},
      {"four-block classification", [&] { return fourpart_suite(limits); }},
      {"block codimension formulas", [] { return lemma_sweeps(); }},
      {"degree-q census against the moment oracle", [&] { return degq_census_check(limits); }},
      {"polarization independence", [&] { return polarization_independence(limits); }},
      {"exponential path for p > n", [&] { return exponential_suite(limits); }},
      {"orbit count and Clifford identity", [&] { return counting_identities(limits); }},
      {"inducible pairs", [&] { return inducible_pairs(limits); }},
      {"byte determinism", [] { return determinism(); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.fail(e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (c.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << secs
         << " s)";
    std::cout << line.str() << std::endl;
    for (const auto& n : c.notes) std::cerr << "  " << n << "\n";
    failed += !c.ok;
  }
  return failed ? 1 : 0;
}
