#include "grcc/case_ingest.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "grcc/text.hpp"

namespace grcc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void fail(int line_no, const std::string& msg) {
  throw ParseError("line " + itos(line_no) + ": " + msg);
}

double num_at(const std::vector<std::string_view>& tok, size_t i, int line_no) {
  double v;
  if (i >= tok.size()) fail(line_no, "missing numeric field " + itos((long long)i + 1));
  if (!parse_double(tok[i], v)) fail(line_no, "bad number '" + std::string(tok[i]) + "'");
  return v;
}

int int_at(const std::vector<std::string_view>& tok, size_t i, int line_no) {
  int v;
  if (i >= tok.size()) fail(line_no, "missing integer field " + itos((long long)i + 1));
  if (!parse_int(tok[i], v)) fail(line_no, "bad integer '" + std::string(tok[i]) + "'");
  return v;
}

struct Line {
  int no;
  std::string_view body;
};

// Strips comments ('#' native, '%' matpower) and blank lines.
std::vector<Line> logical_lines(const std::string& text, char comment) {
  std::vector<Line> out;
  int no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    ++no;
    std::string_view raw(text.data() + pos, eol - pos);
    if (size_t c = raw.find(comment); c != std::string_view::npos)
      raw = raw.substr(0, c);
    raw = trim(raw);
    if (!raw.empty()) out.push_back({no, raw});
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return out;
}

// -------------------------------------------------------------------------
// Native structured format
// -------------------------------------------------------------------------

PowerCase parse_native_case(const std::string& text) {
  PowerCase pc;
  pc.loads = VectorXd();
  std::map<int, double> load_map;
  bool saw_basemva = false;

  for (const Line& ln : logical_lines(text, '#')) {
    auto tok = split_ws(ln.body);
    std::string_view key = tok[0];
    if (key == "case") {
      if (tok.size() > 1) pc.name = std::string(tok[1]);
    } else if (key == "basemva") {
      pc.base_mva = num_at(tok, 1, ln.no);
      saw_basemva = true;
    } else if (key == "bus") {
      Bus b;
      b.id = int_at(tok, 1, ln.no);
      if (tok.size() < 3) fail(ln.no, "bus needs a type (slack|pv|pq)");
      if (tok[2] == "slack") b.type = BusType::slack;
      else if (tok[2] == "pv") b.type = BusType::pv;
      else if (tok[2] == "pq") b.type = BusType::pq;
      else fail(ln.no, "unknown bus type '" + std::string(tok[2]) + "'");
      pc.buses.push_back(b);
    } else if (key == "branch") {
      Branch br;
      br.from = int_at(tok, 1, ln.no);
      br.to = int_at(tok, 2, ln.no);
      br.reactance = num_at(tok, 3, ln.no);
      br.flow_limit = num_at(tok, 4, ln.no);
      pc.branches.push_back(br);
    } else if (key == "gen") {
      Generator g;
      g.bus = int_at(tok, 1, ln.no);
      g.p_min = num_at(tok, 2, ln.no);
      g.p_max = num_at(tok, 3, ln.no);
      g.cost_quad = num_at(tok, 4, ln.no);
      g.cost_lin = num_at(tok, 5, ln.no);
      g.cost_const = num_at(tok, 6, ln.no);
      if (tok.size() >= 9) {
        g.adj_down = num_at(tok, 7, ln.no);
        g.adj_up = num_at(tok, 8, ln.no);
      } else {
        g.adj_up = 0.1 * g.p_max;
        g.adj_down = -g.adj_up;
      }
      pc.generators.push_back(g);
    } else if (key == "load") {
      int bus = int_at(tok, 1, ln.no);
      load_map[bus] += num_at(tok, 2, ln.no);
    } else if (key == "wind") {
      WindFarm w;
      w.bus = int_at(tok, 1, ln.no);
      w.forecast = num_at(tok, 2, ln.no);
      pc.wind_farms.push_back(w);
    } else {
      fail(ln.no, "unknown directive '" + std::string(key) + "'");
    }
  }
  (void)saw_basemva;

  pc.loads = VectorXd::Zero((Eigen::Index)pc.buses.size());
  for (auto [bus, mw] : load_map) {
    int idx = pc.bus_index(bus);
    if (idx < 0) throw ParseError("load: unknown bus " + itos(bus));
    pc.loads[idx] = mw;
  }
  validate_case(pc);
  return pc;
}

// -------------------------------------------------------------------------
// MATPOWER-style subset: baseMVA, bus, gen, branch, gencost tables
// -------------------------------------------------------------------------

struct MatpowerTables {
  std::string name;
  double base_mva = 100.0;
  std::vector<std::vector<double>> bus, gen, branch, gencost;
};

MatpowerTables scan_matpower(const std::string& text) {
  MatpowerTables t;
  std::vector<std::vector<double>>* active = nullptr;
  for (const Line& ln : logical_lines(text, '%')) {
    std::string body(ln.body);
    if (active == nullptr) {
      auto tok = split_ws(body);
      if (tok[0] == "function") {
        if (!tok.empty()) t.name = std::string(tok.back());
        continue;
      }
      size_t eq = body.find('=');
      if (body.rfind("mpc.", 0) == 0 && eq != std::string::npos) {
        std::string field(trim(std::string_view(body).substr(4, eq - 4)));
        std::string rhs(trim(std::string_view(body).substr(eq + 1)));
        if (field == "baseMVA") {
          if (!rhs.empty() && rhs.back() == ';') rhs.pop_back();
          double v;
          if (!parse_double(trim(rhs), v)) fail(ln.no, "bad baseMVA");
          t.base_mva = v;
          continue;
        }
        if (field == "version") continue;
        if (rhs.rfind('[', 0) != 0) fail(ln.no, "expected '[' to open mpc." + field);
        if (field == "bus") active = &t.bus;
        else if (field == "gen") active = &t.gen;
        else if (field == "branch") active = &t.branch;
        else if (field == "gencost") active = &t.gencost;
        else fail(ln.no, "unsupported table mpc." + field);
        body = rhs.substr(1);
        if (trim(body).empty()) continue;
      } else {
        fail(ln.no, "unexpected content outside a table: '" + body + "'");
      }
    }
    // inside a table
    bool closes = false;
    if (size_t b = body.find(']'); b != std::string::npos) {
      closes = true;
      body = body.substr(0, b);
    }
    for (auto& ch : body)
      if (ch == ';' || ch == ',') ch = ' ';
    auto tok = split_ws(body);
    if (!tok.empty()) {
      std::vector<double> row;
      row.reserve(tok.size());
      for (auto s : tok) {
        double v;
        if (!parse_double(s, v)) fail(ln.no, "bad number '" + std::string(s) + "'");
        row.push_back(v);
      }
      active->push_back(std::move(row));
    }
    if (closes) active = nullptr;
  }
  if (active != nullptr) throw ParseError("unterminated table (missing '];')");
  return t;
}

PowerCase parse_matpower_case(const std::string& text) {
  MatpowerTables t = scan_matpower(text);
  if (t.bus.empty()) throw ParseError("missing mpc.bus table");
  if (t.gen.empty()) throw ParseError("missing mpc.gen table");
  if (t.branch.empty()) throw ParseError("missing mpc.branch table");

  PowerCase pc;
  pc.name = t.name;
  pc.base_mva = t.base_mva;
  const double base = pc.base_mva;

  pc.loads = VectorXd::Zero((Eigen::Index)t.bus.size());
  for (size_t i = 0; i < t.bus.size(); ++i) {
    const auto& row = t.bus[i];
    if (row.size() < 3) throw ParseError("bus row " + itos((long long)i + 1) + ": too few columns");
    Bus b;
    b.id = (int)std::lround(row[0]);
    int type = (int)std::lround(row[1]);
    if (type == 3) b.type = BusType::slack;
    else if (type == 2) b.type = BusType::pv;
    else if (type == 1) b.type = BusType::pq;
    else throw ParseError("bus " + itos(b.id) + ": unsupported bus type " + itos(type));
    pc.buses.push_back(b);
    pc.loads[(Eigen::Index)i] = row[2] / base;
  }

  std::vector<bool> gen_on;
  for (size_t i = 0; i < t.gen.size(); ++i) {
    const auto& row = t.gen[i];
    if (row.size() < 10) throw ParseError("gen row " + itos((long long)i + 1) + ": too few columns");
    bool on = row[7] > 0;
    gen_on.push_back(on);
    if (!on) continue;
    Generator g;
    g.bus = (int)std::lround(row[0]);
    g.p_max = row[8] / base;
    g.p_min = row[9] / base;
    g.adj_up = 0.1 * g.p_max;
    g.adj_down = -g.adj_up;
    pc.generators.push_back(g);
  }

  if (!t.gencost.empty()) {
    if (t.gencost.size() != t.gen.size())
      throw ParseError("gencost rows (" + itos((long long)t.gencost.size()) +
                       ") do not match gen rows (" + itos((long long)t.gen.size()) + ")");
    size_t k = 0;
    for (size_t i = 0; i < t.gencost.size(); ++i) {
      if (!gen_on[i]) continue;
      const auto& row = t.gencost[i];
      if (row.size() < 4) throw ParseError("gencost row " + itos((long long)i + 1) + ": too few columns");
      int model = (int)std::lround(row[0]);
      int ncost = (int)std::lround(row[3]);
      if (model != 2)
        throw ParseError("gencost row " + itos((long long)i + 1) + ": only polynomial model 2 supported");
      if (row.size() < 4 + (size_t)ncost)
        throw ParseError("gencost row " + itos((long long)i + 1) + ": declared " + itos(ncost) + " coefficients");
      Generator& g = pc.generators[k++];
      // MATPOWER costs are in $/h against MW output; rescale to per-unit power.
      if (ncost == 3) {
        g.cost_quad = row[4] * base * base;
        g.cost_lin = row[5] * base;
        g.cost_const = row[6];
      } else if (ncost == 2) {
        g.cost_lin = row[4] * base;
        g.cost_const = row[5];
      } else if (ncost == 1) {
        g.cost_const = row[4];
      } else {
        throw ParseError("gencost row " + itos((long long)i + 1) +
                         ": polynomial degree above quadratic unsupported");
      }
    }
  }

  for (size_t i = 0; i < t.branch.size(); ++i) {
    const auto& row = t.branch[i];
    if (row.size() < 6) throw ParseError("branch row " + itos((long long)i + 1) + ": too few columns");
    Branch br;
    br.from = (int)std::lround(row[0]);
    br.to = (int)std::lround(row[1]);
    br.reactance = row[3];
    br.flow_limit = row[5] <= 0 ? kInf : row[5] / base;
    pc.branches.push_back(br);
  }

  validate_case(pc);
  return pc;
}

bool looks_native(const std::string& text) {
  for (const Line& ln : logical_lines(text, '#')) {
    auto tok = split_ws(ln.body);
    return tok[0] == "case" || tok[0] == "basemva" || tok[0] == "bus";
  }
  return false;
}

VectorXd broadcast(const std::vector<double>& vals, Eigen::Index n,
                   const std::string& key) {
  VectorXd v(n);
  if (vals.size() == 1) {
    v.setConstant(vals[0]);
  } else if ((Eigen::Index)vals.size() == n) {
    for (Eigen::Index i = 0; i < n; ++i) v[i] = vals[(size_t)i];
  } else {
    throw ParseError(key + ": expected 1 or " + itos((long long)n) + " values, got " +
                     itos((long long)vals.size()));
  }
  return v;
}

}  // namespace

PowerCase parse_case(const std::string& text) {
  if (looks_native(text)) return parse_native_case(text);
  if (text.find("mpc.") != std::string::npos || text.find("function") != std::string::npos)
    return parse_matpower_case(text);
  throw ParseError("unrecognized case format (expected native 'case' directives or MATPOWER 'mpc.' tables)");
}

void validate_case(const PowerCase& pc) {
  if (pc.buses.empty()) throw ParseError("case has no buses");
  std::set<int> ids;
  int slack_count = 0;
  for (const auto& b : pc.buses) {
    if (!ids.insert(b.id).second)
      throw ParseError("bus " + itos(b.id) + ": duplicate id");
    if (b.type == BusType::slack) ++slack_count;
  }
  if (slack_count == 0) throw ParseError("no slack bus");
  if (slack_count > 1) throw ParseError("multiple slack buses");

  for (size_t i = 0; i < pc.branches.size(); ++i) {
    const auto& br = pc.branches[i];
    std::string at = "branch[" + itos((long long)i + 1) + "]";
    if (!ids.count(br.from)) throw ParseError(at + ".from: unknown bus " + itos(br.from));
    if (!ids.count(br.to)) throw ParseError(at + ".to: unknown bus " + itos(br.to));
    if (br.from == br.to) throw ParseError(at + ": self-loop on bus " + itos(br.from));
    if (!(br.reactance > 0)) throw ParseError(at + ".reactance: must be > 0");
    if (!(br.flow_limit > 0)) throw ParseError(at + ".flow_limit: must be > 0");
  }
  for (size_t i = 0; i < pc.generators.size(); ++i) {
    const auto& g = pc.generators[i];
    std::string at = "gen[" + itos((long long)i + 1) + "]";
    if (!ids.count(g.bus)) throw ParseError(at + ".bus: unknown bus " + itos(g.bus));
    if (g.p_min > g.p_max) throw ParseError(at + ": p_min > p_max");
    if (g.adj_down > 0) throw ParseError(at + ".adj_down: must be <= 0");
    if (g.adj_up < 0) throw ParseError(at + ".adj_up: must be >= 0");
    if (g.cost_quad < 0) throw ParseError(at + ".cost_quad: must be >= 0 (convex cost)");
  }
  for (size_t i = 0; i < pc.wind_farms.size(); ++i) {
    const auto& w = pc.wind_farms[i];
    if (!ids.count(w.bus))
      throw ParseError("wind[" + itos((long long)i + 1) + "].bus: unknown bus " + itos(w.bus));
  }
  if (pc.loads.size() != (Eigen::Index)pc.buses.size())
    throw ParseError("loads vector size does not match bus count");
}

PowerCase augment_case(const PowerCase& pc, const std::string& config_text) {
  PowerCase out = pc;
  for (const Line& ln : logical_lines(config_text, '#')) {
    auto tok = split_ws(ln.body);
    if (tok[0] == "wind") {
      if (!pc.wind_farms.empty())
        fail(ln.no, "case already defines wind farms; config 'wind' entries are only for cases without them");
      WindFarm w;
      w.bus = int_at(tok, 1, ln.no);
      w.forecast = num_at(tok, 2, ln.no);
      out.wind_farms.push_back(w);
    } else if (tok[0] == "adj") {
      int ordinal = int_at(tok, 1, ln.no);
      if (ordinal < 1 || ordinal > (int)out.generators.size())
        fail(ln.no, "adj: generator ordinal " + itos(ordinal) + " out of range");
      out.generators[(size_t)ordinal - 1].adj_down = num_at(tok, 2, ln.no);
      out.generators[(size_t)ordinal - 1].adj_up = num_at(tok, 3, ln.no);
    }
  }
  validate_case(out);
  return out;
}

StudyConfig parse_config(const std::string& text, const PowerCase& pc) {
  const Eigen::Index ng = (Eigen::Index)pc.generators.size();
  const Eigen::Index nl = (Eigen::Index)pc.branches.size();
  const Eigen::Index nw = (Eigen::Index)pc.wind_farms.size();

  StudyConfig cfg;
  bool saw_mu0 = false, saw_sigma0 = false;
  std::vector<double> eps_gen{0.2}, eps_adj{0.2}, eps_line{0.2};

  auto nums = [](const std::vector<std::string_view>& tok, int line_no) {
    std::vector<double> v;
    for (size_t i = 1; i < tok.size(); ++i) {
      double x;
      if (!parse_double(tok[i], x)) fail(line_no, "bad number '" + std::string(tok[i]) + "'");
      v.push_back(x);
    }
    if (v.empty()) fail(line_no, "expected at least one value");
    return v;
  };

  for (const Line& ln : logical_lines(text, '#')) {
    auto tok = split_ws(ln.body);
    std::string_view key = tok[0];
    if (key == "config") {
      if (tok.size() > 1) cfg.name = std::string(tok[1]);
    } else if (key == "eps_gen") {
      eps_gen = nums(tok, ln.no);
    } else if (key == "eps_adj") {
      eps_adj = nums(tok, ln.no);
    } else if (key == "eps_line") {
      eps_line = nums(tok, ln.no);
    } else if (key == "gamma1") {
      cfg.gamma1 = num_at(tok, 1, ln.no);
    } else if (key == "gamma2") {
      cfg.gamma2 = num_at(tok, 1, ln.no);
    } else if (key == "mu0") {
      auto v = nums(tok, ln.no);
      cfg.mu0 = broadcast(v, (Eigen::Index)v.size(), "mu0");
      saw_mu0 = true;
    } else if (key == "sigma0") {
      auto v = nums(tok, ln.no);
      auto n = (Eigen::Index)std::llround(std::sqrt((double)v.size()));
      if (n * n != (Eigen::Index)v.size())
        fail(ln.no, "sigma0: expected a square row-major matrix");
      cfg.sigma0 = MatrixXd(n, n);
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) cfg.sigma0(i, j) = v[(size_t)(i * n + j)];
      saw_sigma0 = true;
    } else if (key == "sigma0_diag") {
      auto v = nums(tok, ln.no);
      cfg.sigma0 = MatrixXd::Zero((Eigen::Index)v.size(), (Eigen::Index)v.size());
      for (size_t i = 0; i < v.size(); ++i) cfg.sigma0((Eigen::Index)i, (Eigen::Index)i) = v[i];
      saw_sigma0 = true;
    } else if (key == "sigma_s_mode") {
      if (tok.size() < 2) fail(ln.no, "sigma_s_mode needs a value (full|paper)");
      if (tok[1] == "full") cfg.sigma_s_mode = SigmaSumMode::full_covariance;
      else if (tok[1] == "paper") cfg.sigma_s_mode = SigmaSumMode::paper_literal;
      else fail(ln.no, "sigma_s_mode: expected 'full' or 'paper'");
    } else if (key == "slack_bus") {
      cfg.slack_bus = int_at(tok, 1, ln.no);
    } else if (key == "lp_tol") {
      cfg.tolerances.lp_tol = num_at(tok, 1, ln.no);
    } else if (key == "cone_tol") {
      cfg.tolerances.cone_tol = num_at(tok, 1, ln.no);
    } else if (key == "max_iterations") {
      cfg.tolerances.max_iterations = int_at(tok, 1, ln.no);
    } else if (key == "wind_expansion_buses") {
      for (size_t i = 1; i < tok.size(); ++i)
        cfg.wind_expansion_buses.push_back(int_at(tok, i, ln.no));
    } else if (key == "wind" || key == "adj") {
      // consumed by augment_case
    } else {
      fail(ln.no, "unknown config key '" + std::string(key) + "'");
    }
  }

  cfg.eps_gen = broadcast(eps_gen, ng, "eps_gen");
  cfg.eps_adj = broadcast(eps_adj, ng, "eps_adj");
  cfg.eps_line = broadcast(eps_line, nl, "eps_line");
  if (!saw_mu0) cfg.mu0 = VectorXd::Zero(nw);
  if (!saw_sigma0) {
    cfg.sigma0 = MatrixXd::Zero(nw, nw);
    for (Eigen::Index i = 0; i < nw; ++i) {
      double sd = 0.1 * pc.wind_farms[(size_t)i].forecast;
      cfg.sigma0(i, i) = sd * sd;
    }
  }
  validate_config(cfg, pc);
  return cfg;
}

void validate_config(const StudyConfig& cfg, const PowerCase& pc) {
  const Eigen::Index ng = (Eigen::Index)pc.generators.size();
  const Eigen::Index nl = (Eigen::Index)pc.branches.size();
  const Eigen::Index nw = (Eigen::Index)pc.wind_farms.size();

  auto check_eps = [](const VectorXd& v, const std::string& key) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (!(v[i] > 0 && v[i] < 1))
        throw ParseError(key + "[" + itos(i + 1) + "]: risk level must lie in (0,1), got " + dtos(v[i]));
  };
  if (cfg.eps_gen.size() != ng) throw ParseError("eps_gen: expected " + itos(ng) + " entries");
  if (cfg.eps_adj.size() != ng) throw ParseError("eps_adj: expected " + itos(ng) + " entries");
  if (cfg.eps_line.size() != nl) throw ParseError("eps_line: expected " + itos(nl) + " entries");
  check_eps(cfg.eps_gen, "eps_gen");
  check_eps(cfg.eps_adj, "eps_adj");
  check_eps(cfg.eps_line, "eps_line");

  if (!(cfg.gamma1 >= 0)) throw ParseError("gamma1: must be >= 0, got " + dtos(cfg.gamma1));
  if (!(cfg.gamma2 >= 1)) throw ParseError("gamma2: must be >= 1, got " + dtos(cfg.gamma2));

  if (cfg.mu0.size() != nw)
    throw ParseError("mu0: dimension " + itos(cfg.mu0.size()) + " does not match " + itos(nw) + " wind farms");
  if (cfg.sigma0.rows() != nw || cfg.sigma0.cols() != nw)
    throw ParseError("sigma0: dimension " + itos(cfg.sigma0.rows()) + "x" + itos(cfg.sigma0.cols()) +
                     " does not match " + itos(nw) + " wind farms");
  if (nw > 0) {
    double scale = std::max(1.0, cfg.sigma0.cwiseAbs().maxCoeff());
    if ((cfg.sigma0 - cfg.sigma0.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
      throw ParseError("sigma0: must be symmetric");
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(cfg.sigma0);
    if (es.eigenvalues().minCoeff() < -1e-10 * scale)
      throw ParseError("sigma0: must be positive semidefinite (min eigenvalue " +
                       dtos(es.eigenvalues().minCoeff()) + ")");
  }
  if (cfg.slack_bus != -1 && pc.bus_index(cfg.slack_bus) < 0)
    throw ParseError("slack_bus: unknown bus " + itos(cfg.slack_bus));
  for (int b : cfg.wind_expansion_buses)
    if (pc.bus_index(b) < 0) throw ParseError("wind_expansion_buses: unknown bus " + itos(b));
  if (!(cfg.tolerances.lp_tol > 0) || !(cfg.tolerances.cone_tol > 0))
    throw ParseError("solver tolerances must be positive");
  if (cfg.tolerances.max_iterations < 1) throw ParseError("max_iterations must be >= 1");
}

std::string serialize_case(const PowerCase& pc) {
  std::string s;
  s += "case " + (pc.name.empty() ? std::string("unnamed") : pc.name) + "\n";
  s += "basemva " + dtos(pc.base_mva) + "\n";
  for (const auto& b : pc.buses) {
    const char* t = b.type == BusType::slack ? "slack" : (b.type == BusType::pv ? "pv" : "pq");
    s += "bus " + itos(b.id) + " " + t + "\n";
  }
  for (const auto& br : pc.branches)
    s += "branch " + itos(br.from) + " " + itos(br.to) + " " + dtos(br.reactance) + " " +
         dtos(br.flow_limit) + "\n";
  for (const auto& g : pc.generators)
    s += "gen " + itos(g.bus) + " " + dtos(g.p_min) + " " + dtos(g.p_max) + " " +
         dtos(g.cost_quad) + " " + dtos(g.cost_lin) + " " + dtos(g.cost_const) + " " +
         dtos(g.adj_down) + " " + dtos(g.adj_up) + "\n";
  for (Eigen::Index i = 0; i < pc.loads.size(); ++i)
    if (pc.loads[i] != 0.0)
      s += "load " + itos(pc.buses[(size_t)i].id) + " " + dtos(pc.loads[i]) + "\n";
  for (const auto& w : pc.wind_farms)
    s += "wind " + itos(w.bus) + " " + dtos(w.forecast) + "\n";
  return s;
}

std::string serialize_config(const StudyConfig& cfg) {
  std::string s;
  s += "config " + (cfg.name.empty() ? std::string("unnamed") : cfg.name) + "\n";
  auto vec = [&s](const char* key, const VectorXd& v) {
    if (v.size() == 0) return;
    s += key;
    for (Eigen::Index i = 0; i < v.size(); ++i) s += " " + dtos(v[i]);
    s += "\n";
  };
  vec("eps_gen", cfg.eps_gen);
  vec("eps_adj", cfg.eps_adj);
  vec("eps_line", cfg.eps_line);
  s += "gamma1 " + dtos(cfg.gamma1) + "\n";
  s += "gamma2 " + dtos(cfg.gamma2) + "\n";
  if (cfg.mu0.size() > 0) {
    s += "mu0";
    for (Eigen::Index i = 0; i < cfg.mu0.size(); ++i) s += " " + dtos(cfg.mu0[i]);
    s += "\n";
    s += "sigma0";
    for (Eigen::Index i = 0; i < cfg.sigma0.rows(); ++i)
      for (Eigen::Index j = 0; j < cfg.sigma0.cols(); ++j) s += " " + dtos(cfg.sigma0(i, j));
    s += "\n";
  }
  s += std::string("sigma_s_mode ") +
       (cfg.sigma_s_mode == SigmaSumMode::full_covariance ? "full" : "paper") + "\n";
  if (cfg.slack_bus != -1) s += "slack_bus " + itos(cfg.slack_bus) + "\n";
  s += "lp_tol " + dtos(cfg.tolerances.lp_tol) + "\n";
  s += "cone_tol " + dtos(cfg.tolerances.cone_tol) + "\n";
  s += "max_iterations " + itos(cfg.tolerances.max_iterations) + "\n";
  if (!cfg.wind_expansion_buses.empty()) {
    s += "wind_expansion_buses";
    for (int b : cfg.wind_expansion_buses) s += " " + itos(b);
    s += "\n";
  }
  return s;
}

Study make_study(const std::string& case_text, const std::string& config_text) {
  PowerCase pc = parse_case(case_text);
  pc = augment_case(pc, config_text);
  StudyConfig cfg = parse_config(config_text, pc);
  return {std::move(pc), std::move(cfg)};
}

Study load_study(const std::filesystem::path& case_path,
                 const std::filesystem::path& config_path) {
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream f(p);
    if (!f) throw ParseError("cannot open file: " + p.string());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  };
  std::string case_text = slurp(case_path);
  std::string config_text = config_path.empty() ? std::string() : slurp(config_path);
  return make_study(case_text, config_text);
}

}  // namespace grcc
