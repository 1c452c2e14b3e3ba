// Command-line driver: cover statistics, the non-geometric kernel
// verification, kernel witness search, the lemma sweep, the torus demo and
// manifold realization recipes.

#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "slc/report.hpp"

namespace {

using nlohmann::json;
using slc::ExitCode;

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::invalid_argument("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void line(const json& j) { stream() << j.dump() << '\n'; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int code(ExitCode c) { return static_cast<int>(c); }

int cmd_info(const slc::RunConfig& cfg) {
  slc::RunConfig checked = cfg;
  checked.depth = 0;
  slc::validate(checked);
  const slc::CoverCW cover(cfg.genus);
  const auto stats = slc::cover_stats(cover);
  Output out(cfg.out);
  if (cfg.format == slc::ReportFormat::kText) {
    out.stream() << slc::to_text(stats);
  } else {
    auto j = slc::to_json(stats);
    j["cycle_dim"] = cover.cycle_dim();
    j["boundary_rank"] = cover.boundary_rank();
    out.line(j);
  }
  return code(ExitCode::kSuccess);
}

int cmd_verify(const slc::RunConfig& cfg) {
  const auto report = slc::run_verification(cfg);
  Output out(cfg.out);
  if (cfg.format == slc::ReportFormat::kText) {
    out.stream() << slc::to_text(report);
  } else {
    for (const auto& j : slc::to_json_lines(report)) out.line(j);
  }
  return code(report.status());
}

int cmd_search_kernel(const slc::RunConfig& cfg) {
  slc::validate(cfg);
  const slc::GroupContext ctx(std::make_shared<const slc::CoverCW>(cfg.genus));
  const auto found = slc::search_kernel_elements(ctx, cfg.kernel_len);
  Output out(cfg.out);
  for (const auto& w : found) {
    const slc::WitnessRecord rec{w.word, w.proper_power, slc::is_trivial(w.word), ctx.in_kernel(w.word)};
    if (cfg.format == slc::ReportFormat::kText) {
      out.stream() << slc::to_string(w.word) << (w.proper_power ? "  (proper power)" : "") << '\n';
    } else {
      out.line(slc::to_json(rec));
    }
  }
  const ExitCode status = found.empty() ? ExitCode::kNoWitness : ExitCode::kSuccess;
  if (cfg.format == slc::ReportFormat::kText) {
    out.stream() << found.size() << " witnesses up to length " << cfg.kernel_len << ": " << slc::status_label(status)
                 << '\n';
  } else {
    json s{{"schema", slc::kSchemaVersion}, {"type", "summary"}, {"witnesses", found.size()},
           {"kernel_len", cfg.kernel_len}, {"status", slc::status_label(status)}};
    out.line(s);
  }
  return code(status);
}

int cmd_lemma_check(const slc::RunConfig& cfg) {
  slc::validate(cfg);
  const slc::GroupContext ctx(std::make_shared<const slc::CoverCW>(cfg.genus));
  const auto classes = slc::generate_simple_classes(cfg.genus, cfg.depth, cfg.max_len, cfg.workers);
  const auto lemma = slc::lemma_check(ctx, classes, cfg.workers);
  Output out(cfg.out);
  if (cfg.format == slc::ReportFormat::kText) {
    out.stream() << lemma.separating_checked << " separating classes, " << lemma.lifts_checked << " lifts, "
                 << lemma.lifts_closed << " closed, " << lemma.lifts_nonzero << " with nonzero H1 class\n"
                 << lemma.nonseparating_checked << " nonseparating classes with no closed lift\n";
    for (const auto& f : lemma.failures) out.stream() << "failure: " << f << '\n';
  } else {
    out.line(slc::to_json(lemma));
  }
  return code(lemma.ok() ? ExitCode::kSuccess : ExitCode::kContradiction);
}

int cmd_torus_demo(const slc::RunConfig& cfg, long bound) {
  const auto scan = slc::scan_torus_kernel(bound);
  const auto torus = slc::torus_embedding_sidedness();
  const slc::GroupContext ctx(std::make_shared<const slc::CoverCW>(2));
  const auto main_map = slc::main_construction_sidedness(ctx);
  const auto free_factor = slc::free_factor_sidedness(ctx);

  Output out(cfg.out);
  if (cfg.format == slc::ReportFormat::kText) {
    out.stream() << "torus in RP^2 x S^1: scanned |p|,|q| <= " << bound << ", kernel size " << scan.kernel.size()
                 << ", simple classes in kernel " << scan.simple_in_kernel << '\n'
                 << "non-geometric kernel: " << (scan.non_geometric() ? "true" : "false") << '\n'
                 << "torus embedding is " << (torus.two_sided ? "2-sided" : "1-sided") << '\n'
                 << "surface map into orientable M is " << (main_map.two_sided ? "2-sided" : "1-sided") << '\n'
                 << "surface map into M # (RP^2 x S^(n-2)) is " << (free_factor.two_sided ? "2-sided" : "1-sided")
                 << '\n';
    for (int n = 4; n <= 6; ++n) {
      const auto ext = slc::extend_to_dimension(n, bound);
      out.stream() << "n = " << n << ": pi1 " << ext.fundamental_group << (ext.needs_review ? " [review] " : " ")
                   << ext.note << '\n';
    }
  } else {
    out.line(slc::to_json(scan));
    auto j = slc::to_json(torus);
    j["map"] = "torus_in_rp2_x_s1";
    out.line(j);
    j = slc::to_json(main_map);
    j["map"] = "surface_to_orientable_M";
    out.line(j);
    j = slc::to_json(free_factor);
    j["map"] = "surface_to_M_sum_rp2_x_sphere";
    out.line(j);
    for (int n = 4; n <= 6; ++n) out.line(slc::to_json(slc::extend_to_dimension(n, bound)));
  }
  return code(scan.non_geometric() && !torus.two_sided && main_map.two_sided ? ExitCode::kSuccess
                                                                            : ExitCode::kContradiction);
}

int cmd_realize(const slc::RunConfig& cfg, const std::string& input, int dimension) {
  slc::ManifoldRecipe recipe;
  if (input.empty()) {
    slc::RunConfig checked = cfg;
    checked.depth = 0;
    slc::validate(checked);
    recipe = slc::recipe_for_G(cfg.genus, dimension);
  } else {
    std::ifstream in(input);
    if (!in) throw std::invalid_argument("cannot read presentation file " + input);
    recipe = slc::realize(slc::parse_presentation(in), dimension);
  }
  Output out(cfg.out);
  if (cfg.format == slc::ReportFormat::kText) {
    out.stream() << slc::to_text(recipe);
  } else {
    out.line(slc::to_json(recipe));
  }
  return code(ExitCode::kSuccess);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite quotient of a surface group with non-geometric kernel"};
  app.require_subcommand(1);

  slc::RunConfig cfg;
  std::string format = "json";
  long bound = 100;
  std::string input;
  int dimension = 4;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--genus", cfg.genus, "surface genus")->capture_default_str();
    sub->add_option("--workers", cfg.workers, "worker threads")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed recorded in the report")->capture_default_str();
    sub->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out, "write the report to this file");
  };
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--depth", cfg.depth, "twist sequence length bound")->capture_default_str();
    sub->add_option("--max-len", cfg.max_len, "word length bound for simple classes")->capture_default_str();
  };

  auto* info = app.add_subcommand("info", "cover statistics");
  add_common(info);
  auto* verify = app.add_subcommand("verify", "full verification run");
  add_common(verify);
  add_family(verify);
  verify->add_option("--kernel-len", cfg.kernel_len, "kernel witness search length")->capture_default_str();
  auto* search = app.add_subcommand("search-kernel", "search for nontrivial kernel elements");
  add_common(search);
  search->add_option("--kernel-len", cfg.kernel_len, "word length bound")->capture_default_str();
  auto* lemma = app.add_subcommand("lemma-check", "lift every certified simple class to the cover");
  add_common(lemma);
  add_family(lemma);
  auto* torus = app.add_subcommand("torus-demo", "1-sided torus counterexample and sidedness checks");
  add_common(torus);
  torus->add_option("--bound", bound, "scan bound for |p| and |q|")->capture_default_str();
  auto* realize = app.add_subcommand("realize", "manifold recipe for a presentation (or for G if none given)");
  add_common(realize);
  realize->add_option("presentation", input, "presentation file");
  realize->add_option("--dim", dimension, "manifold dimension")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : code(ExitCode::kUsage);
  }
  cfg.format = format == "text" ? slc::ReportFormat::kText : slc::ReportFormat::kJson;

  try {
    if (*info) return cmd_info(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*search) return cmd_search_kernel(cfg);
    if (*lemma) return cmd_lemma_check(cfg);
    if (*torus) return cmd_torus_demo(cfg, bound);
    if (*realize) return cmd_realize(cfg, input, dimension);
  } catch (const slc::ResourceBoundError& e) {
    std::cerr << "resource bound: " << e.what() << '\n';
    return code(ExitCode::kResourceBound);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return code(ExitCode::kUsage);
  }
  return code(ExitCode::kUsage);
}
