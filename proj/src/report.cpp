#include "slc/report.hpp"

#include <chrono>
#include <sstream>

namespace slc {

using nlohmann::json;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

json record(const char* type) { return json{{"schema", kSchemaVersion}, {"type", type}}; }

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.genus < kMinGenus) throw std::invalid_argument("genus must be at least 2");
  if (cfg.workers < 1) throw std::invalid_argument("worker count must be at least 1");
  if (cfg.kernel_len < 1) throw std::invalid_argument("kernel search length must be at least 1");
  if (cfg.max_len < 1) throw std::invalid_argument("max word length must be at least 1");
  if (cfg.genus > kMaxCoverGenus) {
    throw ResourceBoundError("genus " + std::to_string(cfg.genus) + " exceeds the supported bound " +
                             std::to_string(kMaxCoverGenus));
  }
  if (cfg.kernel_len > kMaxKernelSearchLength) {
    throw ResourceBoundError("kernel search length " + std::to_string(cfg.kernel_len) + " exceeds " +
                             std::to_string(kMaxKernelSearchLength));
  }
  if (cfg.depth > kMaxTwistDepth) {
    throw ResourceBoundError("twist depth " + std::to_string(cfg.depth) + " exceeds " +
                             std::to_string(kMaxTwistDepth));
  }
}

CoverStats cover_stats(const CoverCW& cover) {
  CoverStats s;
  s.genus = cover.genus();
  s.degree = cover.degree();
  s.euler_characteristic = cover.euler_characteristic();
  s.cover_genus = cover.cover_genus();
  s.h1_dim = cover.h1_dim();
  s.order_log2 = static_cast<std::size_t>(2 * cover.genus()) + cover.h1_dim();
  s.vertices = cover.num_vertices();
  s.edges = cover.num_edges();
  s.faces = cover.num_faces();
  return s;
}

ExitCode VerificationReport::status() const {
  if (!non_geometric.ok() || !lemma.ok()) return ExitCode::kContradiction;
  for (const auto& w : witnesses) {
    if (!w.in_kernel || w.dehn_trivial) return ExitCode::kContradiction;
  }
  if (witnesses.empty()) return ExitCode::kNoWitness;
  return ExitCode::kSuccess;
}

VerificationReport run_verification(const RunConfig& cfg) {
  validate(cfg);
  VerificationReport report;
  report.config = cfg;

  auto t0 = std::chrono::steady_clock::now();
  auto cover = std::make_shared<const CoverCW>(cfg.genus);
  const GroupContext ctx(cover);
  report.cover = cover_stats(*cover);
  report.timing.cover_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  report.classes = generate_simple_classes(cfg.genus, cfg.depth, cfg.max_len, cfg.workers);
  report.timing.generation_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  report.non_geometric = verify_non_geometric(ctx, report.classes, cfg.workers);
  report.timing.verification_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  report.lemma = lemma_check(ctx, report.classes, cfg.workers);
  report.timing.lemma_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  for (const auto& w : search_kernel_elements(ctx, cfg.kernel_len)) {
    report.witnesses.push_back(WitnessRecord{w.word, w.proper_power, is_trivial(w.word), ctx.in_kernel(w.word)});
  }
  report.timing.kernel_search_ms = ms_since(t0);
  return report;
}

json to_json(const RunConfig& cfg) {
  json j = record("config");
  j["genus"] = cfg.genus;
  j["depth"] = cfg.depth;
  j["max_len"] = cfg.max_len;
  j["kernel_len"] = cfg.kernel_len;
  j["workers"] = cfg.workers;
  j["seed"] = cfg.seed;
  j["format"] = cfg.format == ReportFormat::kJson ? "json" : "text";
  return j;
}

json to_json(const CoverStats& s) {
  json j = record("cover");
  j["genus"] = s.genus;
  j["degree"] = s.degree;
  j["euler_characteristic"] = s.euler_characteristic;
  j["cover_genus"] = s.cover_genus;
  j["h1_dim"] = s.h1_dim;
  j["group_order_log2"] = s.order_log2;
  j["vertices"] = s.vertices;
  j["edges"] = s.edges;
  j["faces"] = s.faces;
  return j;
}

json to_json(const LemmaReport& lemma) {
  json j = record("lemma");
  j["separating_checked"] = lemma.separating_checked;
  j["nonseparating_checked"] = lemma.nonseparating_checked;
  j["lifts_checked"] = lemma.lifts_checked;
  j["lifts_closed"] = lemma.lifts_closed;
  j["lifts_nonzero_h1"] = lemma.lifts_nonzero;
  j["failures"] = lemma.failures;
  j["ok"] = lemma.ok();
  return j;
}

json to_json(const WitnessRecord& w) {
  json j = record("witness");
  j["word"] = to_string(w.word);
  j["length"] = w.word.size();
  j["in_kernel"] = w.in_kernel;
  j["dehn_trivial"] = w.dehn_trivial;
  j["proper_power"] = w.proper_power;
  return j;
}

json class_record(const SimpleClass& c, const ClassVerdict& v) {
  json j = record("class");
  j["word"] = to_string(c.cls.rep);
  j["length"] = c.cls.length();
  j["base"] = c.base;
  j["certificate"] = c.certificate;
  j["separating"] = c.separating;
  j["rho"] = json{{"deck_nonzero", v.deck_nonzero}, {"h1_nonzero", v.h1_nonzero}};
  j["in_kernel"] = v.in_kernel;
  return j;
}

json to_json(const ManifoldRecipe& r) {
  json j = record("recipe");
  j["dimension"] = r.dimension;
  j["base"] = r.base;
  j["handle_count"] = r.handle_count;
  j["symbolic"] = r.symbolic;
  json steps = json::array();
  for (const auto& s : r.steps) {
    steps.push_back(json{{"relator", s.relator},
                         {"remove", s.removed},
                         {"glue", s.glued},
                         {"justification", s.justification}});
  }
  j["steps"] = steps;
  json group;
  group["generators"] = r.resulting_group.generators;
  json rels = json::array();
  for (const auto& rel : r.resulting_group.relators) rels.push_back(format_word(r.resulting_group, rel));
  group["relators"] = rels;
  j["resulting_group"] = group;
  if (r.group_order_log2) j["group_order_log2"] = *r.group_order_log2;
  j["notes"] = r.notes;
  return j;
}

json to_json(const TorusScan& scan) {
  json j = record("torus_scan");
  j["bound"] = scan.bound;
  j["kernel_size"] = scan.kernel.size();
  bool all_even_axis = true;
  for (const auto& c : scan.kernel) all_even_axis = all_even_axis && c.q == 0 && c.p % 2 == 0;
  j["kernel_is_2k_0"] = all_even_axis;
  j["simple_in_kernel"] = scan.simple_in_kernel;
  j["non_geometric_kernel"] = scan.non_geometric();
  return j;
}

json to_json(const SidednessReport& s) {
  json j = record("sidedness");
  j["two_sided"] = s.two_sided;
  j["homomorphism_verified"] = s.homomorphism_verified;
  j["notes"] = s.notes;
  return j;
}

json to_json(const DimensionExtension& ext) {
  json j = record("dimension_extension");
  j["dimension"] = ext.dimension;
  j["fundamental_group"] = ext.fundamental_group;
  j["pi1_unchanged"] = ext.pi1_unchanged;
  j["needs_review"] = ext.needs_review;
  j["note"] = ext.note;
  j["non_geometric_kernel"] = ext.scan.non_geometric();
  return j;
}

std::string status_label(ExitCode code) {
  switch (code) {
    case ExitCode::kSuccess: return "verified";
    case ExitCode::kContradiction: return "verification failure";
    case ExitCode::kUsage: return "usage error";
    case ExitCode::kResourceBound: return "resource bound exceeded";
    case ExitCode::kNoWitness: return "no witness found at this bound";
  }
  return "unknown";
}

std::vector<json> to_json_lines(const VerificationReport& report, bool with_timing) {
  std::vector<json> lines;
  lines.push_back(to_json(report.config));
  lines.push_back(to_json(report.cover));
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    lines.push_back(class_record(report.classes[i], report.non_geometric.verdicts[i]));
  }
  for (const auto& w : report.witnesses) lines.push_back(to_json(w));
  lines.push_back(to_json(report.lemma));

  const auto& ng = report.non_geometric;
  json summary = record("summary");
  summary["classes"] = json{{"total", ng.total}, {"separating", ng.separating}, {"nonseparating", ng.nonseparating}};
  summary["rejected_by_deck"] = ng.rejected_by_deck;
  summary["rejected_by_h1"] = ng.rejected_by_h1;
  summary["flag_mismatches"] = ng.flag_mismatches;
  json hits = json::array();
  for (auto i : ng.kernel_hits) {
    hits.push_back(json{{"word", to_string(report.classes[i].cls.rep)},
                        {"base", report.classes[i].base},
                        {"certificate", report.classes[i].certificate}});
  }
  summary["kernel_hits"] = hits;
  summary["witnesses"] = report.witnesses.size();
  summary["lemma_ok"] = report.lemma.ok();
  summary["coverage_note"] =
      "certified twist images of standard curves only; classes deduplicated by free conjugacy";
  const ExitCode code = report.status();
  summary["status"] = status_label(code);
  summary["exit_code"] = static_cast<int>(code);
  if (with_timing) {
    const auto& t = report.timing;
    summary["timing_ms"] = json{{"cover", t.cover_ms},
                                {"generation", t.generation_ms},
                                {"verification", t.verification_ms},
                                {"lemma", t.lemma_ms},
                                {"kernel_search", t.kernel_search_ms}};
  }
  lines.push_back(std::move(summary));
  return lines;
}

std::string to_text(const CoverStats& s) {
  std::ostringstream out;
  out << "genus                 " << s.genus << '\n'
      << "covering degree       " << s.degree << '\n'
      << "cells (V, E, F)       " << s.vertices << ", " << s.edges << ", " << s.faces << '\n'
      << "Euler characteristic  " << s.euler_characteristic << '\n'
      << "cover genus           " << s.cover_genus << '\n'
      << "dim H1(cover; Z/2)    " << s.h1_dim << '\n'
      << "|G|                   2^" << s.order_log2 << '\n';
  return out.str();
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  const auto& ng = report.non_geometric;
  out << to_text(report.cover);
  out << "simple classes        " << ng.total << " (" << ng.separating << " separating, " << ng.nonseparating
      << " nonseparating)\n"
      << "  rejected by deck    " << ng.rejected_by_deck << '\n'
      << "  rejected by H1      " << ng.rejected_by_h1 << '\n'
      << "  kernel hits         " << ng.kernel_hits.size() << '\n'
      << "lemma lifts           " << report.lemma.lifts_closed << " closed, " << report.lemma.lifts_nonzero
      << " non-separating of " << report.lemma.lifts_checked << '\n'
      << "kernel witnesses      " << report.witnesses.size() << '\n';
  for (std::size_t i = 0; i < report.witnesses.size() && i < 5; ++i) {
    out << "  " << to_string(report.witnesses[i].word) << '\n';
  }
  for (const auto& f : report.lemma.failures) out << "lemma failure: " << f << '\n';
  out << "status                " << status_label(report.status()) << '\n';
  return out.str();
}

std::string to_text(const ManifoldRecipe& r) {
  std::ostringstream out;
  out << "dimension " << r.dimension << '\n' << "base      " << r.base << '\n';
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const auto& s = r.steps[i];
    out << "step " << i + 1 << "    along " << s.relator << ": remove " << s.removed << ", glue " << s.glued << '\n';
  }
  if (!r.symbolic) out << "group     " << to_string(r.resulting_group) << '\n';
  if (r.group_order_log2) out << "|G|       2^" << *r.group_order_log2 << '\n';
  for (const auto& n : r.notes) out << "note      " << n << '\n';
  return out.str();
}

ReverifyResult reverify_report(std::istream& in, const GroupContext& ctx) {
  const TwistTable table(ctx.genus());
  ReverifyResult result;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    if (j.value("schema", 0) != kSchemaVersion) {
      ++result.failures;
      continue;
    }
    const std::string type = j.value("type", "");
    if (type == "witness") {
      ++result.witnesses;
      const Word w = parse_word(j.at("word").get<std::string>(), ctx.genus());
      if (!ctx.in_kernel(w) || is_trivial(w)) ++result.failures;
    } else if (type == "class") {
      ++result.classes;
      const Word w = parse_word(j.at("word").get<std::string>(), ctx.genus());
      SimpleClass c{canonical_class(w), j.at("base").get<std::string>(),
                    j.at("certificate").get<std::vector<std::string>>(), j.at("separating").get<bool>()};
      if (ctx.in_kernel(w) || replay_certificate(table, c) != c.cls) ++result.failures;
    }
  }
  return result;
}

}  // namespace slc
