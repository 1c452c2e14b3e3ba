#pragma once

// Reproducible runs and their machine-readable reports.
//
// Reports are JSON lines: one record per class or witness, framed by a
// config record and a summary record. Every record carries "schema": 1.

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "slc/cover.hpp"
#include "slc/curves.hpp"
#include "slc/demos.hpp"
#include "slc/quotient.hpp"
#include "slc/realize.hpp"

namespace slc {

inline constexpr int kSchemaVersion = 1;

enum class ExitCode : int {
  kSuccess = 0,
  kContradiction = 1,
  kUsage = 2,
  kResourceBound = 3,
  kNoWitness = 4,
};

enum class ReportFormat { kJson, kText };

struct RunConfig {
  int genus = 2;
  std::size_t depth = 6;
  std::size_t max_len = 64;
  std::size_t kernel_len = 8;
  std::string out;
  unsigned workers = 1;
  std::uint64_t seed = 20240229;
  ReportFormat format = ReportFormat::kJson;
};

inline constexpr std::size_t kMaxKernelSearchLength = 12;
inline constexpr std::size_t kMaxTwistDepth = 12;

/// Throws std::invalid_argument for malformed settings and
/// ResourceBoundError for settings beyond the supported envelope.
void validate(const RunConfig& cfg);

struct CoverStats {
  int genus = 0;
  std::size_t degree = 0;
  long euler_characteristic = 0;
  std::size_t cover_genus = 0;
  std::size_t h1_dim = 0;
  std::size_t order_log2 = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
};

CoverStats cover_stats(const CoverCW& cover);

struct WitnessRecord {
  Word word;
  bool proper_power = false;
  bool dehn_trivial = false;
  bool in_kernel = false;
};

struct Timing {
  double cover_ms = 0;
  double generation_ms = 0;
  double verification_ms = 0;
  double lemma_ms = 0;
  double kernel_search_ms = 0;
};

struct VerificationReport {
  RunConfig config;
  CoverStats cover;
  std::vector<SimpleClass> classes;
  NonGeometricReport non_geometric;
  LemmaReport lemma;
  std::vector<WitnessRecord> witnesses;
  Timing timing;

  ExitCode status() const;
};

VerificationReport run_verification(const RunConfig& cfg);

nlohmann::json to_json(const RunConfig& cfg);
nlohmann::json to_json(const CoverStats& stats);
nlohmann::json to_json(const LemmaReport& lemma);
nlohmann::json to_json(const WitnessRecord& w);
nlohmann::json to_json(const ManifoldRecipe& recipe);
nlohmann::json to_json(const TorusScan& scan);
nlohmann::json to_json(const SidednessReport& s);
nlohmann::json to_json(const DimensionExtension& ext);
nlohmann::json class_record(const SimpleClass& c, const ClassVerdict& v);

std::string status_label(ExitCode code);

/// Config record, one record per class, one per witness, the lemma record
/// and the summary. The summary carries timing unless `with_timing` is off.
std::vector<nlohmann::json> to_json_lines(const VerificationReport& report, bool with_timing = true);
std::string to_text(const VerificationReport& report);
std::string to_text(const CoverStats& stats);
std::string to_text(const ManifoldRecipe& recipe);

struct ReverifyResult {
  std::size_t classes = 0;
  std::size_t witnesses = 0;
  std::size_t failures = 0;
};

/// Re-checks a JSON-lines report: witness words must be in the kernel and
/// nontrivial, class words must be outside the kernel and replay from their
/// certificates.
ReverifyResult reverify_report(std::istream& in, const GroupContext& ctx);

}  // namespace slc
