#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "curvelab/corpus.hpp"
#include "curvelab/report.hpp"
#include "curvelab/resolve.hpp"
#include "curvelab/search.hpp"
#include <json.hpp>

using namespace curvelab;
using ordered_json = nlohmann::ordered_json;

namespace {

struct CommonOpts {
  int kmax = 3;
  int samples = 40;
  uint64_t seed = 0;
  int workers = 1;
  bool json = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--kmax", o.kmax, "epsilon2 sampling depth");
  cmd->add_option("--samples", o.samples, "epsilon2 sample budget");
  cmd->add_option("--seed", o.seed, "sampler seed");
  cmd->add_option("--workers", o.workers, "worker threads");
  cmd->add_flag("--json", o.json, "machine-readable output");
}

AnalyzeOptions to_options(const CommonOpts& o) {
  AnalyzeOptions a;
  a.k_max = o.kmax;
  a.samples = o.samples;
  a.seed = o.seed;
  a.workers = o.workers;
  return a;
}

void write_dot(const PlaneCurve& C, const CurveReport& r,
               const std::string& path) {
  std::ofstream out(path);
  int i = 0;
  for (const auto& s : r.singular) {
    out << to_dot(resolve_point(C, s.sp.point), "sing" + std::to_string(i++));
    out << "\n";
  }
}

int report_exit(const CurveReport& r) {
  return all_evaluated_hold(r.verdicts) ? 0 : 2;
}

int run_analyze(int p, int s, const std::string& text, bool affine,
                const CommonOpts& o, const std::string& dot) {
  const Field& F = build_field(p, s);
  MultiPoly f(F, 3);
  if (affine) {
    MultiPoly a = parse_poly(text, F, 2);
    f = homogenize(a, a.degree());
  } else {
    f = parse_poly(text, F, 3);
  }
  PlaneCurve C(std::move(f), true);
  CurveReport r = analyze(C, to_options(o));
  std::cout << (o.json ? render_json(r) : render_text(r));
  if (o.json) std::cout << "\n";
  if (!dot.empty()) write_dot(C, r, dot);
  return report_exit(r);
}

int run_examples(const std::string& name, bool list, const CommonOpts& o) {
  if (list) {
    if (o.json) {
      ordered_json names = ordered_json::array();
      for (const auto& e : corpus()) names.push_back(e.name);
      std::cout << names.dump(2) << "\n";
    } else {
      for (const auto& e : corpus()) std::cout << e.name << "\n";
    }
    return 0;
  }
  if (name.empty()) {
    std::cerr << "examples: give a name or --list\n";
    return 1;
  }
  const CorpusEntry& e = corpus_entry(name);
  PlaneCurve C = corpus_curve(e);
  CurveReport r = analyze(C, to_options(o));
  CorpusCheck chk = verify_entry(e, r);
  if (o.json) {
    ordered_json j;
    j["name"] = e.name;
    j["notes"] = e.notes;
    j["report"] = ordered_json::parse(render_json(r, false));
    j["expected_pass"] = chk.pass;
    j["expected_detail"] = chk.detail;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "example: " << e.name << "\n" << e.notes << "\n\n";
    std::cout << render_text(r);
    std::cout << "expectations: " << (chk.pass ? "pass" : "FAIL " + chk.detail)
              << "\n";
  }
  if (!chk.pass) return 2;
  return report_exit(r);
}

int run_search(const SearchConfig& cfg, bool json) {
  SearchResult res = search_curves(cfg);
  if (json) {
    ordered_json j;
    j["scanned"] = res.scanned;
    j["matched"] = res.matched;
    j["found"] = res.found;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& t : res.found) std::cout << t << "\n";
    std::cout << "scanned " << res.scanned << ", matched " << res.matched
              << "\n";
  }
  return 0;
}

int run_verify_corpus(const CommonOpts& o, bool corrupt) {
  ordered_json rows = ordered_json::array();
  bool all_pass = true;
  for (const auto& entry : corpus()) {
    CorpusEntry e = entry;
    if (corrupt && e.expected.N1) e.expected.N1 = *e.expected.N1 + 1;
    PlaneCurve C = corpus_curve(e);
    CurveReport r = analyze(C, to_options(o));
    CorpusCheck chk = verify_entry(e, r);
    if (!chk.pass) all_pass = false;
    if (o.json) {
      rows.push_back({{"name", e.name},
                      {"pass", chk.pass},
                      {"detail", chk.detail},
                      {"Mq", r.counts.Mq},
                      {"N1", r.N1}});
    } else {
      std::cout << (chk.pass ? "PASS  " : "FAIL  ") << e.name << "  Mq="
                << r.counts.Mq << " N1=" << r.N1
                << (chk.detail.empty() ? "" : "  " + chk.detail) << "\n";
    }
  }
  if (o.json) std::cout << rows.dump(2) << "\n";
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvelab: plane curves over finite fields"};
  app.require_subcommand(1);

  // analyze
  auto* an = app.add_subcommand("analyze", "full analysis of one curve");
  int p = 2, s = 1;
  std::string curve_text, dot_path;
  bool affine = false;
  CommonOpts an_opts;
  an->add_option("--p", p, "field characteristic")->required();
  an->add_option("--s", s, "extension degree");
  an->add_option("--curve", curve_text, "polynomial in x,y,z (or x,y with --affine)")
      ->required();
  an->add_flag("--affine", affine, "input is affine; homogenize minimally");
  an->add_option("--dot", dot_path, "write resolution trees (DOT) to this file");
  add_common(an, an_opts);

  // examples
  auto* ex = app.add_subcommand("examples", "built-in example corpus");
  std::string ex_name;
  bool ex_list = false;
  CommonOpts ex_opts;
  ex->add_option("name", ex_name, "example name");
  ex->add_flag("--list", ex_list, "list example names");
  add_common(ex, ex_opts);

  // search
  auto* se = app.add_subcommand("search", "search for Frobenius-nonclassical curves");
  SearchConfig cfg;
  std::string mode = "exhaustive";
  bool se_json = false;
  se->add_option("--p", cfg.p, "field characteristic")->required();
  se->add_option("--s", cfg.s, "extension degree");
  se->add_option("--d", cfg.d, "curve degree")->required();
  se->add_option("--mode", mode, "exhaustive | random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  se->add_option("--samples", cfg.samples, "random-mode sample count");
  se->add_option("--seed", cfg.seed, "random-mode seed");
  se->add_flag("--require-fnc", cfg.require_fnc, "keep only nonclassical curves");
  se->add_flag("--require-singular", cfg.require_singular,
               "keep only curves with a rational singular point");
  se->add_option("--limit", cfg.limit, "cap on reported matches");
  se->add_option("--workers", cfg.workers, "worker threads");
  se->add_flag("--json", se_json, "machine-readable output");

  // verify-corpus
  auto* vc = app.add_subcommand("verify-corpus", "check all examples against expectations");
  CommonOpts vc_opts;
  bool corrupt = false;
  add_common(vc, vc_opts);
  vc->add_flag("--corrupt-expectations", corrupt)->group("");  // test fixture

  CLI11_PARSE(app, argc, argv);

  try {
    if (an->parsed()) return run_analyze(p, s, curve_text, affine, an_opts, dot_path);
    if (ex->parsed()) return run_examples(ex_name, ex_list, ex_opts);
    if (se->parsed()) {
      cfg.exhaustive = (mode == "exhaustive");
      return run_search(cfg, se_json);
    }
    if (vc->parsed()) return run_verify_corpus(vc_opts, corrupt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
