#pragma once

// Command-line front end. Kept as a header so tests can drive it in-process.

#include "CLI11.hpp"
#include "json.hpp"
#include "multspace/charformula.hpp"
#include "multspace/oracle.hpp"

#include <chrono>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace multspace::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kBudget = 3 };

using Json = nlohmann::ordered_json;

/// Payload plus a human-readable rendering of the same content.
struct CommandResult {
  Json payload;
  std::string text;
  bool passed = true;  // false for a failed verification
};

inline std::vector<long> parse_integers(const std::string& text, const std::string& what) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) throw ArgumentError("malformed " + what + " '" + text + "'");
    out.push_back(v);
  }
  if (out.empty() || text.back() == ',') throw ArgumentError("malformed " + what + " '" + text + "'");
  return out;
}

inline Weight parse_weight(const std::string& text, int rank) {
  Weight w(parse_integers(text, "weight"));
  if (static_cast<int>(w.rank()) != rank)
    throw ArgumentError("weight '" + text + "' needs " + std::to_string(rank) + " coordinates");
  return w;
}

struct ModuleArgs {
  std::string type = "A";
  int rank = 1;
  std::vector<std::string> hw;

  ModuleSpec spec() const {
    if (type.size() != 1) throw ArgumentError("--type must be one of A..G");
    auto rs = root_system(type[0], rank);
    if (hw.empty()) throw ArgumentError("at least one --hw is required");
    std::vector<std::pair<Weight, int>> weights;
    for (const auto& h : hw) weights.emplace_back(parse_weight(h, rank), 1);
    return ModuleSpec(rs, std::move(weights));
  }
};

inline void add_module_options(CLI::App* cmd, ModuleArgs& args) {
  cmd->add_option("--type", args.type, "Cartan type A..G")->capture_default_str();
  cmd->add_option("--rank", args.rank, "rank")->capture_default_str();
  cmd->add_option("--hw", args.hw, "highest weight in fundamental coordinates, e.g. 1,0; repeat for a direct sum")
      ->required();
}

inline Json poly_json(const LaurentPolynomial& p) { return polynomial_to_json(p); }

inline CommandResult cmd_fake_degree(int m, const std::string& sigma) {
  CommandResult r;
  std::vector<Partition> shapes;
  if (sigma.empty()) {
    shapes = enumerate_partitions(m);
  } else {
    Partition p = parse_partition(sigma);
    if (p.size() != m) throw ArgumentError("sigma " + p.to_string() + " does not partition m = " + std::to_string(m));
    shapes.push_back(p);
  }
  r.payload["m"] = m;
  Json rows = Json::array();
  for (const auto& p : shapes) {
    auto f = fake_degree(p);
    rows.push_back({{"sigma", p.parts()}, {"poly", poly_json(f)}});
    r.text += p.to_string() + ": " + f.to_string() + "\n";
  }
  r.payload["fake_degrees"] = std::move(rows);
  return r;
}

inline CommandResult cmd_bchar(const ModuleArgs& margs, int m, const std::string& gamma, bool global,
                               std::optional<long> max_degree) {
  if (global && !max_degree) throw ArgumentError("--global requires --max-degree");
  auto V = margs.spec();
  auto g = parse_partition(gamma);
  auto chi = global ? graded_char_B(g, V, m, *max_degree) : graded_char_B_loc(g, V, m);
  CommandResult r;
  r.payload = to_json(chi);
  r.text = to_text(chi);
  return r;
}

inline CommandResult cmd_duality_check(const ModuleArgs& margs, int m, const std::string& gamma) {
  auto V = margs.spec();
  auto g = parse_partition(gamma);
  auto rep = check_duality(g, V, m);
  CommandResult r;
  r.passed = rep.holds;
  r.payload["verdict"] = rep.holds ? "pass" : "fail";
  r.payload["shift"] = rep.shift;
  r.payload["lhs"] = to_json(rep.lhs);
  r.payload["rhs"] = to_json(rep.rhs);
  Json diff = Json::array();
  for (const auto& w : rep.differing) diff.push_back(w.coords);
  r.payload["differing"] = std::move(diff);
  r.text = std::string(rep.holds ? "pass" : "FAIL") + ": chi B_loc(gamma, V) = u^" + std::to_string(rep.shift) +
           " chi B_loc(gamma^v, V*)^*\nlhs:\n" + to_text(rep.lhs) + "rhs:\n" + to_text(rep.rhs);
  for (const auto& w : rep.differing) r.text += "differs at " + w.to_string() + "\n";
  return r;
}

inline CommandResult cmd_oracle_verify(const ModuleArgs& margs, int m, const oracle::OracleLimits& limits) {
  auto V = margs.spec();
  if (m < 1) throw ArgumentError("m must be positive");
  auto model = oracle::explicit_model(V);
  if (!model)
    throw ArgumentError("no explicit model for this module; supported: A1 with --hw k, An with --hw 1,0,..,0 or 0,..,0,1");
  BigInt dim = factorial(m);
  for (int i = 0; i < m; ++i) dim *= model->dimension();
  if (m > limits.max_m || dim > limits.max_dimension)
    throw oracle::BudgetError("oracle budget exceeded: m = " + std::to_string(m) + " (cap " +
                              std::to_string(limits.max_m) + "), dim(V)^m * m! = " + dim.str() + " (cap " +
                              std::to_string(limits.max_dimension) + ")");
  CommandResult r;
  auto ring = oracle::build_coinvariant_ring(m, limits);
  auto M = oracle::build_M_loc(*model, ring, limits);
  auto comm = oracle::verify_commuting_actions(M);
  r.payload["commuting_actions"] = {{"generator_checks", comm.generator_checks},
                                    {"relation_checks", comm.relation_checks}};
  r.text += "commuting actions: pass (" + std::to_string(comm.generator_checks) + " generator pairs)\n";

  bool hilbert_ok = ring.hilbert_series() == LaurentPolynomial::q_factorial(m);
  Json coin = Json::array();
  bool coin_ok = hilbert_ok;
  for (const auto& s : enumerate_partitions(m)) {
    bool ok = oracle::coinvariant_isotypic_series(ring, s) == fake_degree(s);
    coin_ok = coin_ok && ok;
    coin.push_back({{"sigma", s.parts()}, {"match", ok}});
  }
  r.payload["coinvariant"] = {{"hilbert_series_match", hilbert_ok}, {"isotypic", std::move(coin)}};
  r.text += std::string("coinvariant cross-check: ") + (coin_ok ? "pass" : "FAIL") + "\n";

  oracle::BlockTracer tracer(M);
  Json formula = Json::array();
  bool formula_ok = true;
  for (const auto& g : enumerate_partitions(m)) {
    auto expected = oracle::oracle_graded_char_B_loc(tracer, g);
    auto got = graded_char_B_loc(g, V, m);
    bool ok = expected.same_character(got);
    formula_ok = formula_ok && ok;
    formula.push_back({{"gamma", g.parts()}, {"match", ok}, {"oracle", to_json(expected)}});
    r.text += "gamma " + g.to_string() + ": " + (ok ? "pass" : "FAIL") + "\n";
  }
  r.payload["formula_vs_oracle"] = std::move(formula);
  r.passed = coin_ok && formula_ok;
  r.payload["verdict"] = r.passed ? "pass" : "fail";
  return r;
}

inline CommandResult cmd_kronecker(const std::string& tau, const std::string& sigma, const std::string& gamma) {
  auto t = parse_partition(tau), s = parse_partition(sigma), g = parse_partition(gamma);
  auto c = kronecker(t, s, g);
  CommandResult r;
  r.payload = {{"tau", t.parts()}, {"sigma", s.parts()}, {"gamma", g.parts()}, {"value", c.str()}};
  r.text = "c^" + g.to_string() + "_" + t.to_string() + "," + s.to_string() + " = " + c.str() + "\n";
  return r;
}

inline CommandResult cmd_kostka(const std::string& shape, const std::string& content) {
  auto p = parse_partition(shape);
  std::vector<int> a;
  for (long x : parse_integers(content, "content")) a.push_back(static_cast<int>(x));
  auto k = kostka(p, a);
  CommandResult r;
  r.payload = {{"shape", p.parts()}, {"content", a}, {"value", k.str()}};
  r.text = "K[" + p.to_string() + "; " + content + "] = " + k.str() + "\n";
  return r;
}

inline CommandResult cmd_char_table(int m) {
  const auto& t = character_table(m);
  CommandResult r;
  Json classes = Json::array(), sizes = Json::array(), rows = Json::array();
  for (std::size_t i = 0; i < t.labels.size(); ++i) {
    classes.push_back(t.labels[i].parts());
    sizes.push_back(t.class_sizes[i].str());
  }
  std::ostringstream os;
  os << "classes:";
  for (const auto& c : t.labels) os << " " << c.to_string();
  os << "\n";
  for (std::size_t i = 0; i < t.labels.size(); ++i) {
    Json vals = Json::array();
    os << t.labels[i].to_string() << ":";
    for (const auto& v : t.values[i]) {
      vals.push_back(v.str());
      os << " " << v;
    }
    os << "\n";
    rows.push_back({{"irrep", t.labels[i].parts()}, {"values", std::move(vals)}});
  }
  r.payload = {{"m", m}, {"classes", std::move(classes)}, {"class_sizes", std::move(sizes)}, {"rows", std::move(rows)}};
  r.text = os.str();
  return r;
}

inline CommandResult cmd_orbit(const std::string& type, int rank, const std::string& weight) {
  if (type.size() != 1) throw ArgumentError("--type must be one of A..G");
  auto rs = root_system(type[0], rank);
  auto w = parse_weight(weight, rank);
  auto dom = dominant_representative(*rs, w);
  auto orbit = weyl_orbit(*rs, dom);
  CommandResult r;
  Json members = Json::array();
  std::string list;
  for (const auto& x : orbit) {
    members.push_back(x.coords);
    list += " " + x.to_string();
  }
  r.payload = {{"type", type}, {"rank", rank}, {"dominant", dom.coords}, {"dual", dual_weight(*rs, dom).coords},
               {"size", orbit.size()}, {"orbit", std::move(members)}};
  r.text = "dominant " + dom.to_string() + ", dual " + dual_weight(*rs, dom).to_string() + ", |O| = " +
           std::to_string(orbit.size()) + "\n" + list.substr(list.empty() ? 0 : 1) + "\n";
  return r;
}

inline CommandResult cmd_natural_char(int n, int m, const std::string& gamma) {
  auto chi = graded_char_natural(parse_partition(gamma), n, m);
  CommandResult r;
  r.payload = to_json(chi);
  r.text = to_text(chi);
  return r;
}

/// Runs one CLI invocation; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded characters of S_m-multiplicity spaces in (V ⊗ C[t])^{⊗m}"};
  app.require_subcommand(1);
  std::string format = "text";
  bool timing = false;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--timing", timing, "include wall-clock milliseconds in the output");

  int m = 0;
  std::string sigma, gamma, tau, shape, content, weight, type = "A";
  int rank = 1;
  ModuleArgs margs;
  bool local = false, global = false;
  long max_degree_value = -1;

  auto* fd = app.add_subcommand("fake-degree", "fake degrees f_sigma(u)");
  fd->add_option("--m", m, "size")->required();
  fd->add_option("--sigma", sigma, "a single partition, e.g. 2,1");

  auto* bc = app.add_subcommand("bchar", "graded character of B_loc(gamma, V) or B(gamma, V)");
  add_module_options(bc, margs);
  bc->add_option("--m", m)->required();
  bc->add_option("--gamma", gamma)->required();
  auto* lf = bc->add_flag("--local", local, "localized module B_loc (default)");
  auto* gf = bc->add_flag("--global", global, "B(gamma, V), truncated; needs --max-degree");
  lf->excludes(gf);
  auto* md = bc->add_option("--max-degree", max_degree_value, "truncation degree for --global");

  auto* dc = app.add_subcommand("duality-check", "compare B_loc(gamma, V) with the dual of B_loc(gamma^v, V*)");
  add_module_options(dc, margs);
  dc->add_option("--m", m)->required();
  dc->add_option("--gamma", gamma)->required();

  auto* ov = app.add_subcommand("oracle-verify", "brute-force verification against an explicit model of M_loc");
  add_module_options(ov, margs);
  ov->add_option("--m", m)->required();

  auto* kr = app.add_subcommand("kronecker", "Kronecker coefficient c^gamma_{tau, sigma}");
  kr->add_option("--tau", tau)->required();
  kr->add_option("--sigma", sigma)->required();
  kr->add_option("--gamma", gamma)->required();

  auto* ks = app.add_subcommand("kostka", "Kostka number K_{shape, content}");
  ks->add_option("--shape", shape)->required();
  ks->add_option("--content", content)->required();

  auto* ct = app.add_subcommand("char-table", "character table of S_m");
  ct->add_option("--m", m)->required();

  auto* ob = app.add_subcommand("orbit", "Weyl orbit, dominant representative and dual of a weight");
  ob->add_option("--type", type)->capture_default_str();
  ob->add_option("--rank", rank)->capture_default_str();
  ob->add_option("--weight", weight)->required();

  auto* nc = app.add_subcommand("natural-char", "B_loc(gamma, V(omega_1)) for sl_{n+1} via Kostka numbers");
  nc->add_option("--rank", rank)->required();
  nc->add_option("--m", m)->required();
  nc->add_option("--gamma", gamma)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  const auto start = std::chrono::steady_clock::now();
  auto emit_error = [&](const std::string& kind, const std::string& msg, int code) {
    if (format == "json") {
      Json j{{"status", "error"}, {"command", name}, {"error", {{"kind", kind}, {"message", msg}}}};
      out << j.dump(2) << "\n";
    } else {
      err << "error (" << kind << "): " << msg << "\n";
    }
    return code;
  };
  try {
    CommandResult r;
    if (cmd == fd) r = cmd_fake_degree(m, sigma);
    else if (cmd == bc)
      r = cmd_bchar(margs, m, gamma, global, md->count() ? std::optional<long>(max_degree_value) : std::nullopt);
    else if (cmd == dc) r = cmd_duality_check(margs, m, gamma);
    else if (cmd == ov) r = cmd_oracle_verify(margs, m, oracle::OracleLimits::from_environment());
    else if (cmd == kr) r = cmd_kronecker(tau, sigma, gamma);
    else if (cmd == ks) r = cmd_kostka(shape, content);
    else if (cmd == ct) r = cmd_char_table(m);
    else if (cmd == ob) r = cmd_orbit(type, rank, weight);
    else r = cmd_natural_char(rank, m, gamma);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    if (format == "json") {
      Json j{{"status", "ok"}, {"command", name}, {"payload", std::move(r.payload)}};
      if (timing) j["timing_ms"] = ms.count();
      out << j.dump(2) << "\n";
    } else {
      out << r.text;
      if (timing) out << "[" << ms.count() << " ms]\n";
    }
    return r.passed ? kOk : kVerificationFailed;
  } catch (const oracle::BudgetError& e) {
    return emit_error("budget", e.what(), kBudget);
  } catch (const SizeLimitError& e) {
    return emit_error("budget", e.what(), kBudget);
  } catch (const ArgumentError& e) {
    return emit_error("usage", e.what(), kUsage);
  } catch (const ConsistencyError& e) {
    return emit_error("verification", e.what(), kVerificationFailed);
  }
}

}  // namespace multspace::cli
