#include "hg/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hg/verify.hpp"

namespace hg {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Options {
  std::string format = "text";
  int jobs = 0;  // 0 = hardware width
  double budget = double(SearchBudget::kDefaultLimit);
  std::string census_dir;
  bool no_timing = false;

  int width() const {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
  }
};

json verdict_json(const Verdict& v, bool timing) {
  json j;
  j["scenario"] = v.scenario;
  j["verdict"] = v.pass ? (v.partial ? "partial" : "pass") : "fail";
  j["expected"] = v.expected;
  j["observed"] = v.observed;
  if (!v.witness.empty()) j["witness"] = v.witness;
  j["wall_ms"] = timing ? v.wall_ms : 0;
  return j;
}

json report_json(const CensusReport& r, bool timing) {
  json j;
  j["pair"] = r.g_label + "," + r.n_label;
  j["g"] = r.g_label;
  j["n"] = r.n_label;
  j["e"] = r.e_value;
  j["raw_count"] = r.raw_count;
  j["hom_count"] = r.hom_count;
  j["aut_g"] = r.aut_g;
  j["aut_n"] = r.aut_n;
  j["wall_ms"] = timing ? r.wall_ms : 0;
  return j;
}

void render_text_verdict(std::ostream& out, const Verdict& v) {
  out << (v.pass ? (v.partial ? "PARTIAL " : "pass    ") : "FAIL    ")
      << v.scenario << "\n        expected: " << v.expected
      << "\n        observed: " << v.observed << "\n";
  if (!v.witness.empty()) out << "        witness:  " << v.witness << "\n";
}

void render_text_report(std::ostream& out, const CensusReport& r) {
  out << "e(" << r.g_label << ", " << r.n_label << ") = " << r.e_value
      << "   raw_count=" << r.raw_count << " hom_count=" << r.hom_count
      << " |Aut(G)|=" << r.aut_g << " |Aut(N)|=" << r.aut_n << "\n";
}

int finish(std::ostream& out, const Options& opt, const std::string& command,
           json results, bool any_fail, Clock::time_point t0) {
  if (opt.format == "json") {
    json doc;
    doc["command"] = command;
    doc["version"] = kVersion;
    doc["results"] = std::move(results);
    doc["wall_ms"] =
        opt.no_timing
            ? 0
            : std::chrono::duration_cast<std::chrono::milliseconds>(
                  Clock::now() - t0)
                  .count();
    out << doc.dump(2) << "\n";
  }
  return any_fail ? 1 : 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Hopf-Galois structure counts via regular subgroups of holomorphs"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", opt.jobs, "Worker threads (default: cores)");
  app.add_option("--budget", opt.budget, "Search node budget");
  app.add_option("--census-dir", opt.census_dir,
                 "Directory with extra .gtab/.pgen census files")
      ->envname("HG_CENSUS_DIR");
  app.add_flag("--no-timing", opt.no_timing,
               "Zero out wall-clock fields (byte-identical reruns)");

  std::string g_spec, n_spec, scenario, order_str, label, a_label;

  auto* cmd_aut = app.add_subcommand("aut", "Automorphism group of N");
  cmd_aut->add_option("--n", n_spec, "Group spec")->required();

  auto* cmd_hol = app.add_subcommand("hol", "Holomorph of N");
  cmd_hol->add_option("--n", n_spec, "Group spec")->required();

  auto* cmd_reg =
      app.add_subcommand("regulars", "Regular subgroups of Hol(N) iso to G");
  cmd_reg->add_option("--g", g_spec, "Group spec")->required();
  cmd_reg->add_option("--n", n_spec, "Group spec")->required();

  auto* cmd_e = app.add_subcommand("e", "Byott count e(G,N)");
  cmd_e->add_option("--g", g_spec, "Group spec")->required();
  cmd_e->add_option("--n", n_spec, "Group spec")->required();

  auto* cmd_cls =
      app.add_subcommand("classify", "Regular subgroups of Hol(N) by type");
  cmd_cls->add_option("--n", n_spec, "Group spec")->required();

  auto* cmd_ver = app.add_subcommand("verify", "Scenario verification");
  cmd_ver->add_option("--scenario", scenario, "336 | extreme | preflight")
      ->required();
  cmd_ver->add_option("--order", order_str, "Census order (extreme)");
  cmd_ver->add_option("--g", g_spec, "Group spec (extreme, preflight)");

  auto* cmd_cfsg = app.add_subcommand("cfsg", "Desk-scale CFSG instance checks");
  cmd_cfsg->add_option("--a", a_label, "A5 or PSL2(7) (default: both)");

  auto* cmd_schur = app.add_subcommand("schur", "Schur multiplier lookup");
  cmd_schur->add_option("--label", label, "e.g. A6, PSL3(4), M11")->required();

  std::ostringstream cmdline;
  for (int i = 1; i < argc; ++i) cmdline << (i > 1 ? " " : "") << argv[i];

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  auto t0 = Clock::now();
  SearchBudget budget(uint64_t(opt.budget));
  json results = json::array();
  bool any_fail = false;

  try {
    if (*cmd_aut) {
      auto n = build_group(n_spec);
      AutGroup aut = automorphism_group(n);
      json r;
      r["n"] = n->label();
      r["order"] = n->order();
      r["aut_order"] = aut.order();
      r["inn_order"] = aut.inner().size();
      r["out_order"] = aut.order() / aut.inner().size();
      results.push_back(r);
      if (opt.format == "text")
        out << "|Aut(" << n->label() << ")| = " << aut.order()
            << "  |Inn| = " << aut.inner().size()
            << "  |Out| = " << aut.order() / aut.inner().size() << "\n";
    } else if (*cmd_hol) {
      auto n = build_group(n_spec);
      auto hol = build_hol(n);
      json r;
      r["n"] = n->label();
      r["order"] = n->order();
      r["aut_order"] = hol->aut().order();
      r["hol_order"] = hol->order();
      results.push_back(r);
      if (opt.format == "text")
        out << "|Hol(" << n->label() << ")| = " << hol->order() << " = "
            << n->order() << " * " << hol->aut().order() << "\n";
    } else if (*cmd_reg) {
      auto g = build_group(g_spec);
      auto n = build_group(n_spec);
      auto hol = build_hol(n);
      auto res = regular_subgroups_iso(g, hol, &budget, opt.width());
      json r;
      r["pair"] = g->label() + "," + n->label();
      r["raw_count"] = res.subgroups.size();
      r["hom_count"] = res.hom_count;
      if (n->order() <= 24) {
        json subs = json::array();
        for (const auto& s : res.subgroups) {
          json one = json::array();
          for (const auto& h : s.elems)
            one.push_back(json::array({h.eta, h.alpha}));
          subs.push_back(one);
        }
        r["subgroups"] = subs;
      }
      results.push_back(r);
      if (opt.format == "text")
        out << res.subgroups.size() << " regular subgroups of Hol("
            << n->label() << ") isomorphic to " << g->label() << "\n";
    } else if (*cmd_e) {
      auto g = build_group(g_spec);
      auto n = build_group(n_spec);
      CensusReport rep = count_e(g, n, &budget, opt.width());
      results.push_back(report_json(rep, !opt.no_timing));
      if (opt.format == "text") render_text_report(out, rep);
    } else if (*cmd_cls) {
      auto n = build_group(n_spec);
      CensusTier tier = bundled_census(n->order(), opt.census_dir);
      auto cls = classify_regulars(n, tier, &budget);
      json r;
      r["n"] = n->label();
      json counts;
      for (const auto& [lbl, cnt] : cls.counts) counts[lbl] = cnt;
      r["counts"] = counts;
      r["verdict"] = cls.partial ? "partial" : "pass";
      results.push_back(r);
      if (opt.format == "text") {
        out << "regular subgroups of Hol(" << n->label() << ") by type"
            << (cls.partial ? " (census partial)" : "") << ":\n";
        for (const auto& [lbl, cnt] : cls.counts)
          out << "  " << lbl << ": " << cnt << "\n";
      }
    } else if (*cmd_ver) {
      std::vector<Verdict> verdicts;
      if (scenario == "336") {
        verdicts = verify_336(opt.census_dir, &budget, opt.width());
      } else if (scenario == "extreme") {
        if (order_str.empty() || g_spec.empty())
          fail(ErrorKind::UsageError,
               "verify --scenario extreme needs --order and --g");
        CensusTier tier = bundled_census(std::stoi(order_str), opt.census_dir);
        auto g = build_group(g_spec);
        verdicts.push_back(verify_extreme_pattern(g, tier, &budget, opt.width()));
      } else if (scenario == "preflight") {
        if (g_spec.empty())
          fail(ErrorKind::UsageError, "verify --scenario preflight needs --g");
        verdicts.push_back(quasisimple_preflight(build_group(g_spec)));
      } else {
        fail(ErrorKind::UsageError, "unknown scenario '" + scenario + "'");
      }
      for (const auto& v : verdicts) {
        results.push_back(verdict_json(v, !opt.no_timing));
        if (!v.pass) any_fail = true;
        if (opt.format == "text") render_text_verdict(out, v);
      }
    } else if (*cmd_cfsg) {
      std::vector<std::pair<std::string, GroupPtr>> targets;
      if (a_label.empty() || a_label == "A5")
        targets.emplace_back("A5", alt(5));
      if (a_label.empty() || a_label == "PSL2(7)")
        targets.emplace_back("PSL2(7)", psl2(7));
      if (targets.empty())
        fail(ErrorKind::UsageError, "--a must be A5 or PSL2(7)");
      for (const auto& [lbl, grp] : targets)
        for (const auto& v : cfsg_desk_checks(grp, lbl)) {
          results.push_back(verdict_json(v, !opt.no_timing));
          if (!v.pass) any_fail = true;
          if (opt.format == "text") render_text_verdict(out, v);
        }
    } else if (*cmd_schur) {
      int m = schur_lookup(label);
      json r;
      r["label"] = label;
      r["multiplier"] = m;
      results.push_back(r);
      if (opt.format == "text") out << "m(" << label << ") = " << m << "\n";
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  return finish(out, opt, cmdline.str(), std::move(results), any_fail, t0);
}

}  // namespace hg
