#include "sarod/construction.hpp"
#include "sarod/io.hpp"
#include "sarod/rigidity.hpp"
#include "sarod/snl.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace sarod;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnlocalizable = 2;

struct RunConfig {
  std::uint64_t seed = 0;
  double rtol = kDefaultRtol;
  int starts = 20;
  bool timings = false;

  SolverConfig solver() const {
    SolverConfig cfg;
    cfg.seed = seed;
    cfg.rtol = rtol;
    cfg.starts = starts;
    return cfg;
  }
};

void add_run_options(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--seed", rc.seed, "random seed")->capture_default_str();
  cmd->add_option("--rtol", rc.rtol, "relative singular-value tolerance for ranks")->capture_default_str();
  cmd->add_option("--starts", rc.starts, "multi-start count for nonlinear solves")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--timings", rc.timings, "include wall-clock seconds in outputs");
}

// "-" writes to standard output.
void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

std::vector<int> parse_anchor_list(const std::vector<int>& ids, int n) {
  std::vector<int> out;
  for (int id : ids) {
    if (id < 1 || id > n) throw std::invalid_argument("anchor " + std::to_string(id) + " out of range");
    out.push_back(id - 1);
  }
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct GenerateArgs {
  std::string recipe = "quad2v";
  int n = 70;
  std::vector<int> anchors{1, 2};
  std::string out = "-";
  std::string meas_out;
};

int cmd_generate(const GenerateArgs& a, const RunConfig& rc) {
  const Construction c = generate_ordering(parse_recipe(a.recipe), a.n, rc.seed);
  const auto anchors = parse_anchor_list(a.anchors, c.fw.g.n());
  emit(a.out, network_to_json(c.fw, anchors, &c).dump(2) + "\n");
  if (!a.meas_out.empty()) {
    const SensorNetwork net = build_network(c.fw, anchors);
    emit(a.meas_out, measurements_to_json(net.meas).dump(2) + "\n");
  }
  return kExitOk;
}

bool is_four_cycle(const Graph& g) {
  if (g.n() != 4 || g.m() != 4) return false;
  for (int v = 0; v < 4; ++v)
    if (!g.has_edge(v, (v + 1) % 4)) return false;
  return true;
}

struct AnalyzeArgs {
  std::string net;
  std::string out = "-";
};

int cmd_analyze(const AnalyzeArgs& a, const RunConfig& rc) {
  const auto t0 = std::chrono::steady_clock::now();
  const NetworkFile nf = read_network(a.net);
  const Framework& fw = nf.fw;
  Json rep;
  rep["n"] = fw.g.n();
  rep["m"] = fw.g.m();
  const RankReport rr = infinitesimal_rigidity_test(fw, rc.rtol);
  rep["rigidity"] = rank_report_to_json(rr);
  rep["rank_bound"] = 2 * fw.g.m() - fw.g.n();
  const DualityReport dr = duality_check(fw, rc.rtol);
  rep["duality"] = {{"rank", dr.rank}, {"rank_swapped", dr.rank_swapped}, {"equal", dr.equal}};
  rep["c_A"] = triple_components(fw.g, enumerate_triples(fw.g, Attr::A)).count;
  rep["c_D"] = triple_components(fw.g, enumerate_triples(fw.g, Attr::D)).count;
  if (is_four_cycle(fw.g) && fw.g.count(Attr::A) % 4 != 0) rep["quad"] = quad_report_to_json(quad_global_rigidity(fw));
  if (nf.anchors.size() >= 2) {
    const SensorNetwork net = build_network(fw, nf.anchors);
    Json loc;
    loc["anchors"] = nf.anchors;
    for (auto& v : loc["anchors"]) v = v.get<int>() + 1;
    loc["m_augmented"] = net.m();
    const auto b = true_bearings(net);
    const auto d = true_distances(net);
    const LinearSystem cd = assemble_C_D(net, b, rc.rtol);
    const BearingSystem cb = assemble_C_B(net, d, rc.rtol);
    loc["rank_CD"] = cd.rank;
    loc["rows_CD"] = cd.A.rows();
    loc["rank_CB"] = cb.rank;
    loc["rows_CB"] = cb.A.rows();
    loc["L"] = cb.L;
    const EdgeSolution sol = localizability_check(net, rc.solver());
    loc["check"] = solution_to_json(sol);
    loc["verdict"] = to_string(sol.verdict);
    rep["localizability"] = loc;
  }
  if (rc.timings) rep["seconds"] = seconds_since(t0);
  emit(a.out, rep.dump(2) + "\n");
  return kExitOk;
}

struct LocalizeArgs {
  std::string net;
  std::string method = "auto";
  std::string meas;
  std::string out = "-";
  std::string report;
};

int cmd_localize(const LocalizeArgs& a, const RunConfig& rc) {
  const auto t0 = std::chrono::steady_clock::now();
  const NetworkFile nf = read_network(a.net);
  if (nf.anchors.size() < 2) throw std::invalid_argument("localize needs at least two anchors in the network file");
  SensorNetwork net = build_network(nf.fw, nf.anchors);
  if (!a.meas.empty()) set_measurements(net, measurements_from_json(read_json(a.meas), net));
  const LocalizationResult res = localize(net, parse_method(a.method), rc.solver());
  std::ostringstream csv;
  write_result_csv(csv, net.fw.p, res.rec.x);
  emit(a.out, csv.str());
  if (!a.report.empty()) {
    Json rep = localization_to_json(res);
    if (rc.timings) rep["seconds"] = seconds_since(t0);
    emit(a.report, rep.dump(2) + "\n");
  }
  std::cerr << "verdict: " << to_string(res.sol.verdict) << ", mse: " << format_double(res.mse) << '\n';
  if (res.sol.status != "ok") {
    std::cerr << "error: " << res.sol.status << '\n';
    return kExitError;
  }
  return is_localized(res.sol.verdict) ? kExitOk : kExitUnlocalizable;
}

struct QuadArgs {
  std::string net;
  std::string out = "-";
  double tol = 1e-9;
};

int cmd_check_quad(const QuadArgs& a) {
  const NetworkFile nf = read_network(a.net);
  emit(a.out, quad_report_to_json(quad_global_rigidity(nf.fw, a.tol)).dump(2) + "\n");
  return kExitOk;
}

struct ReportArgs {
  std::string spec;
  std::string out = "-";
};

// Spec: {"runs": [{"recipe": str, "n": int, "seeds": [int...], "method": str, "anchors": [int...]}]}
int cmd_report(const ReportArgs& a, const RunConfig& rc) {
  const Json spec = read_json(a.spec);
  std::ostringstream csv;
  csv << "recipe,n,seed,method,m,rank_R,c_A,c_D,dim_A,dim_D,rank_CD,rank_CB,L,verdict,mse,status";
  if (rc.timings) csv << ",seconds";
  csv << '\n';
  const Json runs = spec.is_object() && spec.contains("runs") ? spec["runs"] : Json::array();
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const Json& run = runs[r];
    const std::string path = "runs[" + std::to_string(r) + "]";
    if (!run.contains("recipe") || !run.contains("n") || !run.contains("seeds"))
      throw std::invalid_argument(path + ": needs recipe, n and seeds");
    const std::string recipe = run["recipe"].get<std::string>();
    const int n = run["n"].get<int>();
    const std::string method = run.value("method", std::string("auto"));
    const std::vector<int> anchor_ids = run.value("anchors", std::vector<int>{1, 2});
    for (const auto& js : run["seeds"]) {
      const auto seed = js.get<std::uint64_t>();
      const auto t0 = std::chrono::steady_clock::now();
      csv << recipe << ',' << n << ',' << seed << ',' << method << ',';
      std::string row, status = "ok";
      try {
        const Construction c = generate_ordering(parse_recipe(recipe), n, seed);
        const SensorNetwork net = build_network(c.fw, parse_anchor_list(anchor_ids, n));
        SolverConfig cfg = rc.solver();
        const LocalizationResult res = localize(net, parse_method(method), cfg);
        const auto& s = res.sol;
        // not applicable to the method used
        const auto opt = [](int v) { return v < 0 ? std::string() : std::to_string(v); };
        std::ostringstream os;
        os << c.fw.g.m() << ',' << infinitesimal_rigidity_test(c.fw, rc.rtol).rank << ',' << s.c_A << ',' << s.c_D
           << ',' << s.dim_A << ',' << s.dim_D << ',' << opt(s.rank_CD) << ',' << opt(s.rank_CB) << ',' << opt(s.L) << ','
           << to_string(s.verdict) << ',' << format_double(res.mse) << ',';
        row = os.str();
        status = s.status;
      } catch (const std::exception& e) {
        row = ",,,,,,,,,,,";
        status = e.what();
        for (char& ch : status)
          if (ch == ',' || ch == '\n') ch = ';';
      }
      csv << row << status;
      if (rc.timings) csv << ',' << format_double(seconds_since(t0));
      csv << '\n';
    }
  }
  emit(a.out, csv.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SA-RoD rigidity analysis and sensor-network localization"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand all help");

  RunConfig rc;

  GenerateArgs ga;
  auto* gen = app.add_subcommand("generate", "generate a network by a construction recipe");
  gen->add_option("--recipe", ga.recipe,
                  "quad2v | quad2v-flex | bilat-D1A1 | mix-D2A1 | type2D1 | minimal | random")
      ->capture_default_str();
  gen->add_option("--n", ga.n, "number of vertices")->capture_default_str();
  gen->add_option("--anchors", ga.anchors, "1-based anchor ids")->capture_default_str()->delimiter(',');
  gen->add_option("--out", ga.out, "network JSON path (- for stdout)")->capture_default_str();
  gen->add_option("--meas-out", ga.meas_out, "also write the synthesized measurements here");
  add_run_options(gen, rc);

  AnalyzeArgs aa;
  auto* ana = app.add_subcommand("analyze", "rigidity and localizability report");
  ana->add_option("--net", aa.net, "network JSON")->required();
  ana->add_option("--out", aa.out, "report JSON path (- for stdout)")->capture_default_str();
  add_run_options(ana, rc);

  LocalizeArgs la;
  auto* loc = app.add_subcommand("localize", "solve the localization problem");
  loc->add_option("--net", la.net, "network JSON with anchors")->required();
  loc->add_option("--method", la.method, "auto | sa | rod | general")->capture_default_str();
  loc->add_option("--meas", la.meas, "measurement JSON (default: synthesized from positions)");
  loc->add_option("--out", la.out, "result CSV path (- for stdout)")->capture_default_str();
  loc->add_option("--report", la.report, "report JSON path");
  add_run_options(loc, rc);

  QuadArgs qa;
  auto* quad = app.add_subcommand("check-quad", "global rigidity of a 4-cycle");
  quad->add_option("--net", qa.net, "network JSON with edges (1,2),(2,3),(3,4),(4,1)")->required();
  quad->add_option("--tol", qa.tol, "equality tolerance")->capture_default_str();
  quad->add_option("--out", qa.out, "report JSON path (- for stdout)")->capture_default_str();

  ReportArgs ra;
  auto* rep = app.add_subcommand("report", "batch sweep to an aggregate CSV");
  rep->add_option("--spec", ra.spec, "batch spec JSON")->required();
  rep->add_option("--out", ra.out, "CSV path (- for stdout)")->capture_default_str();
  add_run_options(rep, rc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*gen) return cmd_generate(ga, rc);
    if (*ana) return cmd_analyze(aa, rc);
    if (*loc) return cmd_localize(la, rc);
    if (*quad) return cmd_check_quad(qa);
    if (*rep) return cmd_report(ra, rc);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
