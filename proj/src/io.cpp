#include "sarod/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace sarod {

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw std::invalid_argument(path + ": " + what);
}

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) field_error(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) field_error(path + "." + key, "missing");
  return *it;
}

double number(const Json& v, const std::string& path) {
  if (!v.is_number()) field_error(path, "expected a number");
  return v.get<double>();
}

int vertex_id(const Json& v, const std::string& path, int n) {
  if (!v.is_number_integer()) field_error(path, "expected an integer vertex id");
  const int id = v.get<int>();
  if (id < 1 || id > n) field_error(path, "vertex id " + std::to_string(id) + " out of range 1.." + std::to_string(n));
  return id - 1;
}

Json point(const Vector2d& p) { return Json::array({p.x(), p.y()}); }

Attr parse_attr(const Json& v, const std::string& path) {
  if (v == "A") return Attr::A;
  if (v == "D") return Attr::D;
  field_error(path, "expected \"A\" or \"D\"");
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json construction_to_json(const Construction& c) {
  Json steps = Json::array();
  for (const auto& s : c.log) {
    Json js;
    js["kind"] = to_string(s.kind);
    js["i"] = s.i + 1;
    js["j"] = s.j + 1;
    if (s.kind == AdditionKind::D2) {
      js["k"] = s.k + 1;
      js["third_any"] = s.third_any;
    }
    if (s.kind == AdditionKind::TwoVertex) {
      js["first"] = std::string(1, to_char(s.first));
      js["second"] = std::string(1, to_char(s.second));
    }
    Json at = Json::array();
    for (const auto& p : s.at) at.push_back(point(p));
    js["at"] = at;
    steps.push_back(js);
  }
  Json out;
  out["recipe"] = to_string(c.recipe);
  out["seed"] = c.seed;
  out["n"] = c.fw.g.n();
  out["steps"] = steps;
  return out;
}

Json network_to_json(const Framework& fw, const std::vector<int>& anchors, const Construction* c) {
  std::vector<char> is_anchor(fw.g.n(), 0);
  for (int a : anchors) is_anchor.at(a) = 1;
  Json vertices = Json::array();
  for (int v = 0; v < fw.g.n(); ++v) {
    Json jv;
    jv["id"] = v + 1;
    jv["attr"] = std::string(1, to_char(fw.g.attr(v)));
    jv["pos"] = point(fw.p.col(v));
    jv["anchor"] = static_cast<bool>(is_anchor[v]);
    vertices.push_back(jv);
  }
  Json edges = Json::array();
  for (const auto& e : fw.g.edges()) edges.push_back(Json::array({e.tail + 1, e.head + 1}));
  Json out;
  out["vertices"] = vertices;
  out["edges"] = edges;
  if (c) out["construction"] = construction_to_json(*c);
  return out;
}

NetworkFile network_from_json(const Json& j) {
  const Json& vs = field(j, "vertices", "network");
  if (!vs.is_array()) field_error("vertices", "expected an array");
  const int n = static_cast<int>(vs.size());
  NetworkFile out;
  out.fw.g = Graph(n);
  out.fw.p.resize(2, n);
  std::vector<char> seen(n, 0);
  for (int r = 0; r < n; ++r) {
    const std::string path = "vertices[" + std::to_string(r) + "]";
    const Json& jv = vs[r];
    const int v = vertex_id(field(jv, "id", path), path + ".id", n);
    if (seen[v]) field_error(path + ".id", "duplicate vertex id");
    seen[v] = 1;
    out.fw.g.set_attr(v, parse_attr(field(jv, "attr", path), path + ".attr"));
    const Json& pos = field(jv, "pos", path);
    if (!pos.is_array() || pos.size() != 2) field_error(path + ".pos", "expected [x, y]");
    out.fw.p(0, v) = number(pos[0], path + ".pos[0]");
    out.fw.p(1, v) = number(pos[1], path + ".pos[1]");
    if (jv.contains("anchor")) {
      if (!jv["anchor"].is_boolean()) field_error(path + ".anchor", "expected a boolean");
      if (jv["anchor"].get<bool>()) out.anchors.push_back(v);
    }
  }
  std::sort(out.anchors.begin(), out.anchors.end());
  const Json& es = field(j, "edges", "network");
  if (!es.is_array()) field_error("edges", "expected an array");
  for (std::size_t r = 0; r < es.size(); ++r) {
    const std::string path = "edges[" + std::to_string(r) + "]";
    if (!es[r].is_array() || es[r].size() != 2) field_error(path, "expected [i, j]");
    const int a = vertex_id(es[r][0], path + "[0]", n), b = vertex_id(es[r][1], path + "[1]", n);
    try {
      out.fw.g.add_edge(a, b);
    } catch (const std::exception& e) {
      field_error(path, e.what());
    }
  }
  if (j.contains("construction")) out.construction = j["construction"];
  return out;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw std::invalid_argument(path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                ": malformed JSON: " + e.what());
  }
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << j.dump(2) << '\n';
}

NetworkFile read_network(const std::string& path) {
  const Json j = read_json(path);
  try {
    return network_from_json(j);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

Json measurements_to_json(const MeasurementSet& m) {
  auto list = [](const std::vector<Triple>& t, const Eigen::VectorXd& v) {
    Json out = Json::array();
    for (std::size_t r = 0; r < t.size(); ++r)
      out.push_back({{"apex", t[r].apex + 1},
                     {"j", t[r].j + 1},
                     {"k", t[r].k + 1},
                     {"value", v(static_cast<Eigen::Index>(r))}});
    return out;
  };
  Json out;
  out["sa"] = list(m.sa_triples, m.sa);
  out["rod"] = list(m.rod_triples, m.rod);
  return out;
}

MeasurementSet measurements_from_json(const Json& j, const SensorNetwork& net) {
  MeasurementSet out = net.meas;
  auto fill = [&](const char* key, const std::vector<Triple>& triples, Eigen::VectorXd& values) {
    std::map<std::tuple<int, int, int>, std::size_t> index;
    for (std::size_t r = 0; r < triples.size(); ++r) index[{triples[r].apex, triples[r].j, triples[r].k}] = r;
    std::vector<char> got(triples.size(), 0);
    const Json& list = field(j, key, "measurements");
    if (!list.is_array()) field_error(key, "expected an array");
    for (std::size_t r = 0; r < list.size(); ++r) {
      const std::string path = std::string(key) + "[" + std::to_string(r) + "]";
      int a = vertex_id(field(list[r], "apex", path), path + ".apex", net.n());
      int x = vertex_id(field(list[r], "j", path), path + ".j", net.n());
      int y = vertex_id(field(list[r], "k", path), path + ".k", net.n());
      double v = number(field(list[r], "value", path), path + ".value");
      if (x > y) {
        // swapping the legs inverts an SA (mod 2 pi) and a RoD
        std::swap(x, y);
        v = std::string(key) == "sa" ? wrap_angle(-v) : 1.0 / v;
      }
      const auto it = index.find({a, x, y});
      if (it == index.end()) field_error(path, "triple is not in the augmented network");
      values(static_cast<Eigen::Index>(it->second)) = v;
      got[it->second] = 1;
    }
    for (std::size_t r = 0; r < triples.size(); ++r)
      if (!got[r])
        field_error(key, "missing triple (" + std::to_string(triples[r].apex + 1) + "," +
                             std::to_string(triples[r].j + 1) + "," + std::to_string(triples[r].k + 1) + ")");
  };
  fill("sa", out.sa_triples, out.sa);
  fill("rod", out.rod_triples, out.rod);
  return out;
}

Json rank_report_to_json(const RankReport& r) {
  Json out;
  out["rank"] = r.rank;
  out["required"] = r.required;
  out["verdict"] = r.rigid ? "infinitesimally rigid" : "flexible";
  out["sigma"] = std::vector<double>(r.sigma.data(), r.sigma.data() + r.sigma.size());
  out["rtol"] = r.rtol;
  return out;
}

Json quad_report_to_json(const QuadReport& r) {
  Json out;
  out["verdict"] = to_string(r.verdict);
  out["case"] = r.quad_case;
  std::vector<int> labels;
  for (int l : r.labels) labels.push_back(l + 1);
  out["labels"] = labels;
  out["margin"] = r.margin;
  out["equality_residual"] = r.equality_residual;
  out["detail"] = r.detail;
  return out;
}

Json solution_to_json(const EdgeSolution& s) {
  Json out;
  out["method"] = to_string(s.method);
  out["verdict"] = to_string(s.verdict);
  out["status"] = s.status;
  out["c_A"] = s.c_A;
  out["c_D"] = s.c_D;
  out["dim_A"] = s.dim_A;
  out["dim_D"] = s.dim_D;
  if (s.rank_CD >= 0) {
    out["rank_CD"] = s.rank_CD;
    out["rows_CD"] = s.rows_CD;
  }
  if (s.rank_CB >= 0) {
    out["rank_CB"] = s.rank_CB;
    out["rows_CB"] = s.rows_CB;
    out["L"] = s.L;
  }
  out["variables"] = s.variables;
  out["converged_starts"] = s.converged;
  out["clusters"] = s.clusters;
  out["best_cost"] = s.best_cost;
  out["warnings"] = s.warnings;
  return out;
}

Json localization_to_json(const LocalizationResult& r) {
  Json out = solution_to_json(r.sol);
  out["mse"] = r.mse;
  out["residual"] = {{"sa", r.residual.sa}, {"rod", r.residual.rod}, {"anchor", r.residual.anchor}};
  out["anchor_residual"] =
      std::vector<double>(r.rec.anchor_residual.data(), r.rec.anchor_residual.data() + r.rec.anchor_residual.size());
  Json warnings = out["warnings"];
  for (const auto& w : r.rec.warnings) warnings.push_back(w);
  out["warnings"] = warnings;
  return out;
}

void write_result_csv(std::ostream& os, const Config2d& truth, const Config2d& estimate) {
  os << "vertex_id,true_x,true_y,est_x,est_y,err\n";
  for (Eigen::Index v = 0; v < truth.cols(); ++v)
    os << v + 1 << ',' << format_double(truth(0, v)) << ',' << format_double(truth(1, v)) << ','
       << format_double(estimate(0, v)) << ',' << format_double(estimate(1, v)) << ','
       << format_double((estimate.col(v) - truth.col(v)).norm()) << '\n';
}

}  // namespace sarod
