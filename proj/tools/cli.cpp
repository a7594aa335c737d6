#include "patrep/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "patrep/error.hpp"
#include "patrep/field.hpp"
#include "patrep/pattern.hpp"
#include "patrep/report.hpp"

#ifndef PATREP_VERSION
#define PATREP_VERSION "0.0.0"
#endif

namespace patrep {

namespace {

struct Options {
  std::string spec_file;
  std::string partition;
  std::string roots;
  int n = 0;
  int q = 0;
  std::string cache_dir;
  bool no_cache = false;
  unsigned threads = 1;
  std::uint64_t cap_group = Limits{}.group_cap;
  std::string format = "json";
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  int max_n = 3;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("bad " + what + " entry '" + item + "'");
    }
    if (used != item.size()) throw InvalidInput("bad " + what + " entry '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidInput("empty " + what);
  return out;
}

// "1-2,1-3,2-4"
std::vector<Root> parse_roots(const std::string& text) {
  std::vector<Root> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw InvalidRoot("root '" + item + "' is not of the form i-j");
    const auto ij = parse_int_list(item.substr(0, dash) + "," + item.substr(dash + 1), "root");
    if (ij.size() != 2) throw InvalidRoot("root '" + item + "' is not of the form i-j");
    out.push_back({ij[0], ij[1]});
  }
  if (out.empty()) throw InvalidRoot("empty root list");
  return out;
}

GroupSpec resolve_spec(const Options& o) {
  const int sources = !o.spec_file.empty() + !o.partition.empty() + !o.roots.empty();
  if (sources != 1) throw InvalidInput("give exactly one of --spec, --partition or --roots");
  if (!o.spec_file.empty()) {
    std::ifstream in(o.spec_file);
    if (!in) throw InvalidInput("cannot read " + o.spec_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_group_spec(buf.str());
  }
  GroupSpec s;
  s.q = o.q;
  if (!o.partition.empty()) {
    s.partition = parse_int_list(o.partition, "partition");
    for (int p : s.partition) {
      if (p <= 0) throw InvalidInput("partition parts must be positive");
      s.n += p;
    }
  } else {
    s.roots = parse_roots(o.roots);
    s.n = o.n;
    if (s.n == 0)
      for (const Root& r : s.roots) s.n = std::max(s.n, r.j);
  }
  if (o.q <= 0) throw InvalidInput("--q is required");
  s.root_set();  // validate now
  return s;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput:
      return 2;
    case ErrorKind::ResourceLimit:
      return 3;
    default:
      return 1;
  }
}

void add_common(CLI::App* cmd, Options& o, bool group = true) {
  if (group) {
    cmd->add_option("--spec", o.spec_file, "group spec JSON file");
    cmd->add_option("--partition", o.partition, "parabolic radical, e.g. 1,2,1");
    cmd->add_option("--roots", o.roots, "root list, e.g. 1-2,1-3,2-3");
    cmd->add_option("--n", o.n, "matrix size for --roots");
  }
  cmd->add_option("--q", o.q, "field order");
  cmd->add_option("--cache-dir", o.cache_dir, "store and reuse reports here");
  cmd->add_flag("--no-cache", o.no_cache, "recompute even on a cache hit");
  cmd->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
  cmd->add_option("--cap-group", o.cap_group, "largest |G| for character and oracle work");
  cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--samples", o.samples, "random samples (0 = exhaustive)");
  cmd->add_option("--seed", o.seed, "random seed");
}

int lemma_q(const Options& o) {
  const int q = o.spec_file.empty() ? o.q : resolve_spec(o).q;
  if (q <= 0) throw InvalidInput("--q is required");
  return q;
}

using GroupOp = std::function<Report(const PatternGroup&, const ReportOptions&)>;

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbit method computations for finite pattern groups", "patrep"};
  app.set_version_flag("--version", PATREP_VERSION);
  app.require_subcommand(1);
  Options o;
  std::string op;
  std::function<Report(const ReportOptions&)> action;
  std::function<std::string()> canonical_input;

  auto group_command = [&](CLI::App* parent, const std::string& name, const std::string& help, GroupOp fn,
                           const std::string& full_name) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    add_common(cmd, o);
    cmd->callback([&, fn, full_name] {
      op = full_name;
      action = [&, fn](const ReportOptions& ro) { return fn(resolve_spec(o).build(), ro); };
      canonical_input = [&] { return resolve_spec(o).canonical(); };
    });
    return cmd;
  };

  group_command(&app, "orbits", "list coadjoint orbits", report_orbits, "orbits");
  group_command(&app, "classes", "list conjugacy classes", report_classes, "classes");
  group_command(&app, "classify", "orbit method classification of irreducible characters", report_classify,
                "classify");
  group_command(&app, "certify-good-type", "find an associative polarization for every orbit", report_certify,
                "certify-good-type");
  group_command(&app, "char-table", "character table from induced characters", report_char_table, "char-table");

  CLI::App* verify = app.add_subcommand("verify", "check a structural claim by computation");
  verify->require_subcommand(1);
  group_command(verify, "4parts", "four-block parabolic radicals", verify_4parts, "verify 4parts");
  group_command(verify, "degq", "degree-q characters from size-q^2 orbits", verify_degq, "verify degq");
  group_command(verify, "sameno", "orbit count equals class count", verify_sameno, "verify sameno");
  group_command(verify, "clifford", "Clifford counting identity", verify_clifford, "verify clifford");
  group_command(verify, "inducible", "inducible pairs of full u-rank", verify_inducible, "verify inducible");
  group_command(verify, "polarization-independence", "induced characters per orbit",
                verify_polarization_independence, "verify polarization-independence");
  CLI::App* lemma = verify->add_subcommand("lemma-codim", "block codimension formulas on random matrices");
  add_common(lemma, o, false);
  lemma->add_option("--spec", o.spec_file, "group spec JSON file (only q is used)");
  lemma->add_option("--max-n", o.max_n, "largest block size")->check(CLI::Range(1, 8));
  lemma->callback([&] {
    op = "verify lemma-codim";
    action = [&](const ReportOptions& ro) { return verify_lemma_codim(Field::of_order(lemma_q(o)), o.max_n, ro); };
    canonical_input = [&] { return Field::of_order(lemma_q(o))->describe(); };
  });

  CLI::App* oracle = app.add_subcommand("oracle", "independent brute-force counts");
  oracle->require_subcommand(1);
  group_command(oracle, "degrees", "degree multiplicities from commutator moments", oracle_degrees,
                "oracle degrees");
  group_command(oracle, "clifford", "class count through Clifford theory", oracle_clifford, "oracle clifford");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      if (dynamic_cast<const CLI::CallForVersion*>(&e)) out << PATREP_VERSION << "\n";
      else out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }

  try {
    if (o.format == "csv" && op != "char-table") throw InvalidInput("--format csv is only available for char-table");
    ReportOptions ro;
    ro.limits.threads = o.threads;
    ro.limits.group_cap = o.cap_group;
    ro.samples = o.samples;
    ro.seed = o.seed;

    std::optional<ResultCache> cache;
    std::string key;
    if (!o.cache_dir.empty()) {
      const std::string options = "format=" + o.format + ";cap_group=" + std::to_string(o.cap_group) +
                                  ";samples=" + std::to_string(o.samples) + ";seed=" + std::to_string(o.seed) +
                                  ";max_n=" + std::to_string(o.max_n);
      cache.emplace(o.cache_dir);
      key = ResultCache::key(canonical_input(), op, PATREP_VERSION, options);
      if (!o.no_cache) {
        if (auto hit = cache->load(key)) {
          out << hit->first;
          return hit->second;
        }
      }
    }
    const Report report = action(ro);
    const std::string text = o.format == "csv" ? render_csv(report) : render_json(report);
    const int code = report.pass ? 0 : 1;
    if (cache) cache->store(key, text, code);
    out << text;
    if (!report.pass) {
      err << op << ": FAIL\n";
      if (report.body.contains("checks"))
        for (const auto& c : report.body["checks"])
          if (!c["ok"].get<bool>()) err << "  failed: " << c["claim"].get<std::string>() << "\n";
    }
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace patrep
