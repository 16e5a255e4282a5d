#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gq/cli.hpp"

namespace {

struct Common {
  bool json = false;
  std::string output;
};

void add_common(CLI::App* sub, Common& common, gq::RunConfig& cfg) {
  sub->add_flag("--json", common.json, "Emit the JSON report");
  sub->add_flag("--timing", cfg.timing, "Include wall-clock time (reports are no longer byte-stable)");
  sub->add_option("-o,--output", common.output, "Write the report to a file instead of stdout");
  sub->add_option("--seed", cfg.seed, "Seed for sampled checks")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  gq::RunConfig cfg;
  cfg.threads = gq::threads_from_env();
  Common common;
  std::size_t sample = 0;

  CLI::App app{"Torus quotients of Grassmannians: tableaux, relations, cells"};
  app.require_subcommand(1);

  auto* ms = app.add_subcommand("minimal-schubert", "Minimal Schubert tuple w_{r,n} and its Richardson partner");
  auto* ga = app.add_subcommand("gamma", "The tableau Gamma_{r,n}");
  for (auto* s : {ms, ga}) {
    s->add_option("--r", cfg.r)->required();
    s->add_option("--n", cfg.n)->required();
    add_common(s, common, cfg);
  }

  auto* inv = app.add_subcommand("invariants", "Standard torus-invariant tableaux on X^v_w");
  inv->add_option("--r", cfg.r)->required();
  inv->add_option("--n", cfg.n)->required();
  inv->add_option("--m", cfg.m, "Degree")->required();
  inv->add_option("--w", cfg.w, "Upper tuple, comma separated (default: top)")->delimiter(',');
  inv->add_option("--v", cfg.v, "Lower tuple, comma separated (default: identity)")->delimiter(',');
  inv->add_flag("--count-only", cfg.count_only);
  add_common(inv, common, cfg);

  auto* vr = app.add_subcommand("verify-relations", "Check relations by straightening on X(w)");
  vr->add_option("--family", cfg.family)->capture_default_str();
  add_common(vr, common, cfg);

  auto* cf = app.add_subcommand("confluence", "Overlap ambiguities and exhaustive normal-form check");
  cf->add_option("--rules", cfg.rules, "'g37' or a rule file")->capture_default_str();
  cf->add_option("--max-degree", cfg.max_degree)->capture_default_str();
  add_common(cf, common, cfg);

  auto* de = app.add_subcommand("deodhar", "Positive distinguished subexpressions and restricted sections");
  de->add_option("--word", cfg.word, "Reduced word, comma separated")->delimiter(',');
  de->add_option("--v", cfg.v, "One-line permutation or Grassmannian tuple")->delimiter(',');
  de->add_option("--n", cfg.n, "Group size (default: largest letter + 1)");
  auto* en = de->add_flag("--enumerate", "List all distinguished subexpressions for v");
  auto* pd = de->add_flag("--pds", "Positive distinguished subexpression (default)");
  auto* pr = de->add_option("--probe", cfg.probe_case, "One of s2s4s3, s2s3, s4s3, s3");
  en->excludes(pd)->excludes(pr);
  pd->excludes(pr);
  add_common(de, common, cfg);

  auto* pn = app.add_subcommand("projnorm", "Degree-one generation checks on G(2,n)");
  pn->add_option("--n", cfg.n)->required();
  pn->add_option("--m", cfg.m)->required();
  auto* ex = pn->add_flag("--exhaustive", "Check every invariant (default)");
  auto* sm = pn->add_option("--sample", sample, "Check K invariants drawn with --seed");
  ex->excludes(sm);
  pn->add_flag("--oracle", cfg.oracle, "Also compare ranks of degree-one products");
  add_common(pn, common, cfg);

  auto* ac = app.add_subcommand("acceptance", "Run the acceptance criteria");
  auto* all = ac->add_flag("--all", "Every criterion (default)");
  auto* one = ac->add_option("--criterion", cfg.criteria, "Run only these criteria (repeatable)");
  all->excludes(one);
  add_common(ac, common, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = common.json ? gq::Format::json : gq::Format::text;
  if (*en) cfg.deodhar_mode = "enumerate";
  if (*pr) cfg.deodhar_mode = "probe";
  if (*sm) cfg.sample = sample;

  gq::Report rep;
  try {
    rep = gq::run(cfg);
  } catch (const gq::InvariantViolation& e) {
    rep.command = cfg.command;
    rep.params = gq::params_of(cfg);
    rep.status = "fail";
    rep.payload = {{"error", e.what()}};
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = gq::render(rep, cfg.format);
  if (common.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(common.output);
    if (!f) {
      std::cerr << "error: cannot write " << common.output << "\n";
      return 2;
    }
    f << text;
  }
  return rep.failed() ? 1 : 0;
}
