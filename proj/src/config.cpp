#include "slme/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "slme/density.hpp"

namespace slme {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

void check_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& item : j.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) {
          return item.key() == k;
        }) == allowed.end())
      fail(path + "." + item.key(), "unknown key");
  }
}

double get_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

int get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

bool get_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected a boolean");
  return j.get<bool>();
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Complex get_complex(const json& j, const std::string& path) {
  if (j.is_number()) return Complex{j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex{j[0].get<double>(), j[1].get<double>()};
  fail(path, "expected a number or a [re, im] pair");
}

std::pair<int, int> get_level_pair(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    fail(path, "expected a level pair [upper, lower]");
  return {j[0].get<int>(), j[1].get<int>()};
}

Window get_window(const json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() == "always") return Window::always();
    fail(path, "expected \"always\" or [start, end]");
  }
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    const double s = j[0].get<double>(), t = j[1].get<double>();
    if (!(s < t)) fail(path, "window requires start < end");
    return Window::interval(s, t);
  }
  fail(path, "expected \"always\" or [start, end]");
}

FormFactorConfig get_form_factor(const json& j, const std::string& path) {
  check_keys(j, path, {"model", "amplitude", "width", "cutoff", "path"});
  FormFactorConfig c;
  if (!j.contains("model")) fail(path + ".model", "missing");
  c.model = get_string(j["model"], path + ".model");
  if (c.model != "gaussian" && c.model != "lorentzian" && c.model != "table")
    fail(path + ".model", "expected gaussian, lorentzian, or table");
  if (j.contains("amplitude")) c.amplitude = get_complex(j["amplitude"], path + ".amplitude");
  if (j.contains("width")) c.width = get_number(j["width"], path + ".width");
  if (j.contains("cutoff")) c.cutoff = get_number(j["cutoff"], path + ".cutoff");
  if (c.model == "table") {
    if (!j.contains("path")) fail(path + ".path", "missing (table profile)");
    c.path = get_string(j["path"], path + ".path");
  } else if (j.contains("path")) {
    fail(path + ".path", "only valid for table profiles");
  }
  return c;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text, const std::string& base_dir) {
  json root;
  try {
    root = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config syntax error: ") + e.what());
  }

  ExperimentConfig cfg;
  cfg.base_dir = base_dir;
  check_keys(root, "config",
             {"atom", "bath", "lasers", "solver", "initial_state", "design", "output"});

  // atom
  if (!root.contains("atom")) fail("config.atom", "missing");
  {
    const json& a = root["atom"];
    check_keys(a, "atom", {"energies", "dipoles", "merge_tol"});
    if (!a.contains("energies") || !a["energies"].is_array())
      fail("atom.energies", "expected an array of numbers");
    for (size_t i = 0; i < a["energies"].size(); ++i)
      cfg.energies.push_back(get_number(a["energies"][i], "atom.energies[" + std::to_string(i) + "]"));
    if (!a.contains("dipoles") || !a["dipoles"].is_array())
      fail("atom.dipoles", "expected an array");
    for (size_t i = 0; i < a["dipoles"].size(); ++i) {
      const std::string p = "atom.dipoles[" + std::to_string(i) + "]";
      const json& d = a["dipoles"][i];
      check_keys(d, p, {"levels", "amplitude"});
      if (!d.contains("levels")) fail(p + ".levels", "missing");
      if (!d.contains("amplitude")) fail(p + ".amplitude", "missing");
      const auto lv = get_level_pair(d["levels"], p + ".levels");
      cfg.dipoles.push_back(
          Atom::DipoleEntry{lv.first, lv.second, get_complex(d["amplitude"], p + ".amplitude")});
    }
    if (a.contains("merge_tol")) cfg.merge_tol = get_number(a["merge_tol"], "atom.merge_tol");
    if (!(cfg.merge_tol > 0.0)) fail("atom.merge_tol", "must be positive");
  }

  // validate the atom early so later cross-references have a target
  Atom atom_check = [&] {
    try {
      return cfg.atom();
    } catch (const std::invalid_argument& e) {
      fail("atom", e.what());
    }
  }();

  // bath
  if (!root.contains("bath")) fail("config.bath", "missing");
  {
    const json& b = root["bath"];
    check_keys(b, "bath", {"form_factor", "gamma", "quadrature"});
    if (b.contains("form_factor"))
      cfg.form_factor = get_form_factor(b["form_factor"], "bath.form_factor");
    if (b.contains("gamma")) {
      if (!b["gamma"].is_array()) fail("bath.gamma", "expected an array");
      for (size_t i = 0; i < b["gamma"].size(); ++i) {
        const std::string p = "bath.gamma[" + std::to_string(i) + "]";
        const json& e = b["gamma"][i];
        check_keys(e, p, {"transition", "value"});
        if (!e.contains("transition") || !e.contains("value"))
          fail(p, "needs transition and value");
        GammaEntry ge;
        ge.transition = get_level_pair(e["transition"], p + ".transition");
        ge.value = get_complex(e["value"], p + ".value");
        if (ge.value.real() < 0.0) fail(p + ".value", "Re gamma must be nonnegative");
        cfg.gamma_table.push_back(ge);
      }
    }
    if (!cfg.form_factor && cfg.gamma_table.empty())
      fail("bath", "needs form_factor or a direct gamma table");
    if (cfg.form_factor && !cfg.gamma_table.empty())
      fail("bath", "form_factor and direct gamma table are mutually exclusive");
    if (b.contains("quadrature")) {
      const json& q = b["quadrature"];
      check_keys(q, "bath.quadrature", {"rel_tol", "abs_tol", "initial_cells", "max_doublings"});
      if (q.contains("rel_tol"))
        cfg.quadrature.rel_tol = get_number(q["rel_tol"], "bath.quadrature.rel_tol");
      if (q.contains("abs_tol"))
        cfg.quadrature.abs_tol = get_number(q["abs_tol"], "bath.quadrature.abs_tol");
      if (q.contains("initial_cells"))
        cfg.quadrature.initial_cells = get_int(q["initial_cells"], "bath.quadrature.initial_cells");
      if (q.contains("max_doublings"))
        cfg.quadrature.max_doublings = get_int(q["max_doublings"], "bath.quadrature.max_doublings");
    }
  }

  // lasers
  if (root.contains("lasers")) {
    if (!root["lasers"].is_array()) fail("lasers", "expected an array");
    for (size_t i = 0; i < root["lasers"].size(); ++i) {
      const std::string p = "lasers[" + std::to_string(i) + "]";
      const json& l = root["lasers"][i];
      check_keys(l, p, {"target", "rabi", "intensity", "window"});
      if (!l.contains("target")) fail(p + ".target", "missing");
      LaserConfig lc;
      lc.target = get_level_pair(l["target"], p + ".target");
      const Complex d = atom_check.dipole(lc.target.first, lc.target.second);
      if (d == Complex{0.0, 0.0})
        fail(p + ".target",
             "transition (" + std::to_string(lc.target.first) + "," +
                 std::to_string(lc.target.second) + ") does not exist or is not dipole-coupled");
      if (l.contains("rabi")) lc.rabi = get_complex(l["rabi"], p + ".rabi");
      if (l.contains("intensity"))
        lc.intensity = get_form_factor(l["intensity"], p + ".intensity");
      if (lc.rabi && lc.intensity) fail(p, "rabi and intensity are mutually exclusive");
      if (!lc.rabi && !lc.intensity) fail(p, "needs rabi or intensity");
      if (l.contains("window")) lc.window = get_window(l["window"], p + ".window");
      cfg.lasers.push_back(std::move(lc));
    }
  }

  // solver
  if (root.contains("solver")) {
    const json& s = root["solver"];
    check_keys(s, "solver", {"t_span", "dt", "adaptive", "rel_tol", "abs_tol"});
    if (s.contains("t_span")) {
      if (!s["t_span"].is_array() || s["t_span"].size() != 2)
        fail("solver.t_span", "expected [t0, t1]");
      const double t0 = get_number(s["t_span"][0], "solver.t_span[0]");
      const double t1 = get_number(s["t_span"][1], "solver.t_span[1]");
      if (!(t0 < t1)) fail("solver.t_span", "requires t0 < t1");
      cfg.solver.t_span = {t0, t1};
    }
    if (s.contains("dt")) {
      cfg.solver.dt = get_number(s["dt"], "solver.dt");
      if (!(cfg.solver.dt > 0.0)) fail("solver.dt", "must be positive");
    }
    if (s.contains("adaptive")) cfg.solver.adaptive = get_bool(s["adaptive"], "solver.adaptive");
    if (s.contains("rel_tol")) cfg.solver.rel_tol = get_number(s["rel_tol"], "solver.rel_tol");
    if (s.contains("abs_tol")) cfg.solver.abs_tol = get_number(s["abs_tol"], "solver.abs_tol");
  }

  // initial state
  if (root.contains("initial_state")) {
    const json& s = root["initial_state"];
    check_keys(s, "initial_state", {"level", "mixed", "matrix"});
    const int given = int(s.contains("level")) + int(s.contains("mixed")) + int(s.contains("matrix"));
    if (given != 1) fail("initial_state", "needs exactly one of level, mixed, matrix");
    if (s.contains("level")) {
      cfg.initial_state.kind = InitialStateConfig::Kind::Level;
      cfg.initial_state.level = get_int(s["level"], "initial_state.level");
      if (cfg.initial_state.level < 0 || cfg.initial_state.level >= atom_check.dim())
        fail("initial_state.level", "out of range");
    } else if (s.contains("mixed")) {
      if (!get_bool(s["mixed"], "initial_state.mixed"))
        fail("initial_state.mixed", "must be true when present");
      cfg.initial_state.kind = InitialStateConfig::Kind::Mixed;
    } else {
      cfg.initial_state.kind = InitialStateConfig::Kind::Explicit;
      const json& m = s["matrix"];
      const int d = atom_check.dim();
      if (!m.is_array() || static_cast<int>(m.size()) != d)
        fail("initial_state.matrix", "expected " + std::to_string(d) + " rows");
      cfg.initial_state.rho = Matrix::Zero(d, d);
      for (int r = 0; r < d; ++r) {
        if (!m[r].is_array() || static_cast<int>(m[r].size()) != d)
          fail("initial_state.matrix[" + std::to_string(r) + "]",
               "expected " + std::to_string(d) + " entries");
        for (int c = 0; c < d; ++c)
          cfg.initial_state.rho(r, c) = get_complex(
              m[r][c], "initial_state.matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]");
      }
    }
  }

  // design
  if (root.contains("design")) {
    const json& ds = root["design"];
    check_keys(ds, "design", {"c0", "c1", "kappa", "convention"});
    DesignConfig dc;
    if (!ds.contains("c0") || !ds.contains("c1")) fail("design", "needs c0 and c1");
    dc.c0 = get_complex(ds["c0"], "design.c0");
    dc.c1 = get_complex(ds["c1"], "design.c1");
    if (ds.contains("kappa")) {
      dc.kappa = get_number(ds["kappa"], "design.kappa");
      if (!(dc.kappa > 0.0)) fail("design.kappa", "must be positive");
    }
    if (ds.contains("convention")) {
      const std::string c = get_string(ds["convention"], "design.convention");
      if (c == "consistent")
        dc.convention = DarkStateConvention::Consistent;
      else if (c == "conjugate")
        dc.convention = DarkStateConvention::Conjugate;
      else
        fail("design.convention", "expected consistent or conjugate");
    }
    const double n2 = std::norm(dc.c0) + std::norm(dc.c1);
    if (!(n2 > 0.0)) fail("design", "target amplitudes must not both vanish");
    cfg.design = dc;
  }

  // output
  if (root.contains("output")) {
    const json& o = root["output"];
    check_keys(o, "output", {"trajectory", "diagnostics", "steady", "coeffs", "design"});
    if (o.contains("trajectory")) cfg.output.trajectory = get_string(o["trajectory"], "output.trajectory");
    if (o.contains("diagnostics"))
      cfg.output.diagnostics = get_string(o["diagnostics"], "output.diagnostics");
    if (o.contains("steady")) cfg.output.steady = get_string(o["steady"], "output.steady");
    if (o.contains("coeffs")) cfg.output.coeffs = get_string(o["coeffs"], "output.coeffs");
    if (o.contains("design")) cfg.output.design = get_string(o["design"], "output.design");
  }

  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string dir = ".";
  const auto slash = path.find_last_of('/');
  if (slash != std::string::npos) dir = path.substr(0, slash);
  return parse_config(buf.str(), dir);
}

Atom ExperimentConfig::atom() const { return Atom(energies, dipoles); }

double ExperimentConfig::default_cutoff() const {
  double wmax = 0.0;
  for (const auto& d : dipoles) {
    if (d.amplitude == Complex{0.0, 0.0}) continue;
    wmax = std::max(wmax, energies.at(d.upper) - energies.at(d.lower));
  }
  return wmax > 0.0 ? 10.0 * wmax : 10.0;
}

FormFactor ExperimentConfig::make_form_factor(const FormFactorConfig& c) const {
  const double cutoff = c.cutoff > 0.0 ? c.cutoff : default_cutoff();
  if (c.model == "gaussian") return FormFactor::gaussian(c.amplitude, c.width, cutoff);
  if (c.model == "lorentzian") return FormFactor::lorentzian(c.amplitude, c.width, cutoff);
  const std::string full = c.path.empty() || c.path.front() == '/'
                               ? c.path
                               : base_dir + "/" + c.path;
  std::ifstream in(full);
  if (!in) throw ConfigError("cannot open profile table: " + full);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return FormFactor::table_from_text(buf.str(), c.cutoff);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("profile table " + full + ": " + e.what());
  }
}

std::optional<FormFactor> ExperimentConfig::bath_form_factor() const {
  if (!form_factor) return std::nullopt;
  return make_form_factor(*form_factor);
}

BathCoefficients ExperimentConfig::coefficients(const TransitionSet& ts) const {
  BathCoefficients coeffs;
  coeffs.frequencies = ts.frequencies();
  coeffs.drives.resize(ts.size());
  const std::optional<FormFactor> g = bath_form_factor();

  if (!gamma_table.empty()) {
    const Atom a = atom();
    std::vector<bool> covered(ts.size(), false);
    coeffs.gamma.assign(ts.size(), Complex{0.0, 0.0});
    for (size_t i = 0; i < gamma_table.size(); ++i) {
      const auto& e = gamma_table[i];
      const std::string p = "bath.gamma[" + std::to_string(i) + "]";
      if (e.transition.first < 0 || e.transition.first >= a.dim() || e.transition.second < 0 ||
          e.transition.second >= a.dim() ||
          a.dipole(e.transition.first, e.transition.second) == Complex{0.0, 0.0})
        throw ConfigError(p + ".transition: not a dipole-coupled level pair");
      const double w = energies.at(e.transition.first) - energies.at(e.transition.second);
      const int idx = ts.index_of(w, merge_tol);
      if (idx < 0) throw ConfigError(p + ".transition: no matching Bohr frequency");
      if (covered[idx])
        throw ConfigError(p + ".transition: duplicate gamma for Bohr frequency " +
                          std::to_string(ts.mode(idx).omega));
      covered[idx] = true;
      coeffs.gamma[idx] = e.value;
    }
    for (int i = 0; i < ts.size(); ++i)
      if (!covered[i])
        throw ConfigError("bath.gamma: missing entry for Bohr frequency " +
                          std::to_string(ts.mode(i).omega));
  } else {
    coeffs.gamma.reserve(ts.size());
    for (const auto& m : ts.modes())
      coeffs.gamma.push_back(susceptibility(*g, m.omega, quadrature).gamma);
  }

  std::vector<LaserSpec> specs;
  for (const auto& lc : lasers) {
    LaserSpec s;
    s.omega = energies.at(lc.target.first) - energies.at(lc.target.second);
    s.target = lc.target;
    s.rabi_override = lc.rabi;
    if (lc.intensity) s.intensity = make_form_factor(*lc.intensity);
    s.window = lc.window;
    specs.push_back(std::move(s));
  }
  assign_drives(ts, coeffs, specs, g ? &*g : nullptr, merge_tol);
  return coeffs;
}

Liouvillian ExperimentConfig::liouvillian() const {
  const TransitionSet ts = transition_operators(atom(), merge_tol);
  return Liouvillian(ts, coefficients(ts));
}

Matrix ExperimentConfig::initial_density(int dim) const {
  switch (initial_state.kind) {
    case InitialStateConfig::Kind::Level:
      return level_projector(dim, initial_state.level);
    case InitialStateConfig::Kind::Mixed:
      return maximally_mixed(dim);
    case InitialStateConfig::Kind::Explicit: {
      if (initial_state.rho.rows() != dim)
        throw ConfigError("initial_state.matrix: dimension mismatch");
      try {
        require_density(initial_state.rho, 1e-10, 1e-10, 1e-8);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("initial_state.matrix: ") + e.what());
      }
      return initial_state.rho;
    }
  }
  throw ConfigError("initial_state: unreachable");
}

}  // namespace slme
