#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "patrep/limits.hpp"
#include "patrep/pattern.hpp"

namespace patrep {

/// A machine-readable result. `pass` decides the exit status of verify
/// commands; plain queries always pass.
struct Report {
  nlohmann::json body;
  bool pass = true;
};

struct ReportOptions {
  Limits limits;
  std::uint64_t samples = 0;  // 0 = exhaustive where that makes sense
  std::uint64_t seed = 1;
};

Report report_orbits(const PatternGroup& G, const ReportOptions& opt);
Report report_classes(const PatternGroup& G, const ReportOptions& opt);
/// Orbit method classification: polarization, degree and norm per orbit.
Report report_classify(const PatternGroup& G, const ReportOptions& opt);
Report report_certify(const PatternGroup& G, const ReportOptions& opt);
/// Classification plus every character value.
Report report_char_table(const PatternGroup& G, const ReportOptions& opt);

Report verify_4parts(const PatternGroup& G, const ReportOptions& opt);
Report verify_degq(const PatternGroup& G, const ReportOptions& opt);
Report verify_sameno(const PatternGroup& G, const ReportOptions& opt);
Report verify_clifford(const PatternGroup& G, const ReportOptions& opt);
Report verify_inducible(const PatternGroup& G, const ReportOptions& opt);
Report verify_polarization_independence(const PatternGroup& G, const ReportOptions& opt);
/// Needs only a field; max_n bounds the block sizes.
Report verify_lemma_codim(const FieldPtr& field, int max_n, const ReportOptions& opt);

Report oracle_degrees(const PatternGroup& G, const ReportOptions& opt);
Report oracle_clifford(const PatternGroup& G, const ReportOptions& opt);

/// Sorted-key JSON, two-space indent, trailing newline.
std::string render_json(const Report& r);
/// CSV of a char-table report: one row per character, one column per class.
/// Throws InvalidInput for other reports.
std::string render_csv(const Report& r);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(const std::string& data);

/// On-disk cache of rendered outputs keyed by a hash of everything that
/// determines them.
class ResultCache {
 public:
  explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}
  static std::string key(const std::string& canonical_input, const std::string& operation,
                         const std::string& version, const std::string& options);
  /// Returns the stored output and exit code; a corrupt entry is a miss.
  std::optional<std::pair<std::string, int>> load(const std::string& key) const;
  void store(const std::string& key, const std::string& output, int exit_code) const;

 private:
  std::string dir_;
};

}  // namespace patrep
