#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "fsplit/errors.hpp"
#include "fsplit/lattice.hpp"
#include "fsplit/rigidity.hpp"
#include "fsplit/scenario.hpp"

namespace fsplit {

namespace {

using json = nlohmann::json;

/// Usage errors map to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Args {
  std::vector<std::string> positional;
  std::map<std::string, std::string> options;
  std::vector<std::string> flags;

  bool has_flag(const std::string& f) const {
    return std::find(flags.begin(), flags.end(), f) != flags.end();
  }
};

Args split_args(const std::vector<std::string>& raw, const std::vector<std::string>& valued,
                const std::vector<std::string>& boolean) {
  Args a;
  for (std::size_t i = 1; i < raw.size(); ++i) {
    const std::string& s = raw[i];
    if (s.rfind("--", 0) != 0) {
      a.positional.push_back(s);
      continue;
    }
    std::string name = s, value;
    bool inline_value = false;
    if (auto eq = s.find('='); eq != std::string::npos) {
      name = s.substr(0, eq);
      value = s.substr(eq + 1);
      inline_value = true;
    }
    if (std::find(valued.begin(), valued.end(), name) != valued.end()) {
      if (!inline_value) {
        if (i + 1 >= raw.size()) throw UsageError(name + " needs a value");
        value = raw[++i];
      }
      a.options[name] = value;
    } else if (std::find(boolean.begin(), boolean.end(), name) != boolean.end() && !inline_value) {
      a.flags.push_back(name);
    } else {
      throw UsageError("unknown option " + s);
    }
  }
  return a;
}

long long to_int(const std::string& s, const std::string& what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError(what + " must be an integer");
  return v;
}

std::optional<std::string> lookup(const Scenario& sc, const Args& a, const std::string& key) {
  if (auto it = a.options.find("--" + key); it != a.options.end()) return it->second;
  if (auto it = sc.params.find(key); it != sc.params.end()) return it->second;
  return std::nullopt;
}

bool truthy(const std::optional<std::string>& v) { return v && (*v == "true" || *v == "1" || *v == "yes"); }

const Splitting& need_splitting(const Scenario& sc) {
  if (!sc.splitting) throw UsageError("scenario declares no splitting");
  return *sc.splitting;
}

Ideal need_ideal(const Scenario& sc, const Args& a, std::size_t index = 0) {
  if (a.positional.size() <= index) throw UsageError("missing ideal name");
  const ScenarioIdeal* entry = sc.find_ideal(a.positional[index]);
  if (!entry) throw UsageError("unknown ideal '" + a.positional[index] + "'");
  return entry->ideal(sc.ring);
}

json ideal_json(const Ideal& I) {
  json basis = json::array();
  for (const auto& f : I.basis()) basis.push_back(f.to_string());
  return basis;
}

json lattice_json(const IdealLattice& L, bool exclude_zero, bool exclude_unit) {
  json members = json::array();
  for (const auto& I : L.members) {
    if ((exclude_zero && I.is_zero()) || (exclude_unit && I.is_unit())) continue;
    members.push_back(ideal_json(I));
  }
  json log = json::array();
  for (const auto& r : L.closure_log)
    log.push_back({{"operation", r.operation}, {"inputs", r.inputs}, {"output", r.output}, {"added", r.added}});
  json anomalies = json::array();
  for (const auto& I : L.anomalies) anomalies.push_back(ideal_json(I));
  return {{"members", members},
          {"count", members.size()},
          {"partial", L.partial},
          {"closure_log", log},
          {"nonsquarefree_checked", L.nonsquarefree_checked},
          {"anomalies", anomalies}};
}

std::string members_text(const IdealLattice& L, bool exclude_zero, bool exclude_unit) {
  std::ostringstream os;
  for (const auto& I : L.members) {
    if ((exclude_zero && I.is_zero()) || (exclude_unit && I.is_unit())) continue;
    os << "  " << I.to_string() << "\n";
  }
  return os.str();
}

CommandResult check_splitting(const Scenario& sc, const Args&) {
  const Splitting& phi = need_splitting(sc);
  bool graded = is_graded(phi);
  CommandResult r;
  r.report["result"] = {{"premultiplier", phi.premultiplier().to_string()},
                        {"trace", trace(phi.premultiplier()).to_string()},
                        {"is_splitting", true},
                        {"is_graded", graded}};
  if (!graded) {
    auto v = find_grading_violation(phi, grading_scan_bound(phi.ring()));
    r.report["result"]["grading_violation"] = {
        {"input", monomial_to_string(phi.ring(), v->input)}, {"image", v->image.to_string()}};
  }
  r.summary = "splitting g = " + phi.premultiplier().to_string() + " (Tr(g) = 1), graded=" +
              (graded ? "true" : "false") + "\n";
  return r;
}

CommandResult graded_part_cmd(const Scenario& sc, const Args&) {
  const Splitting& phi = need_splitting(sc);
  Splitting gp = graded_part(phi);
  CommandResult r;
  r.report["result"] = {{"premultiplier", phi.premultiplier().to_string()},
                        {"graded_part", gp.premultiplier().to_string()},
                        {"input_is_graded", is_graded(phi)},
                        {"output_is_graded", is_graded(gp)}};
  r.summary = "graded part: g' = " + gp.premultiplier().to_string() + "\n";
  return r;
}

CommandResult check_compatible(const Scenario& sc, const Args& a) {
  const Splitting& phi = need_splitting(sc);
  Ideal I = need_ideal(sc, a);
  auto cert = is_compatible(phi, I);
  CommandResult r;
  r.report["result"] = {{"ideal", a.positional[0]}, {"basis", ideal_json(I)}, {"verdict", cert.verdict}};
  r.summary = a.positional[0] + " = " + I.to_string() + ": compatible=" + (cert.verdict ? "true" : "false");
  if (cert.witness) {
    r.report["result"]["witness"] = cert.witness->to_string();
    r.report["result"]["witness_image"] = phi(*cert.witness).to_string();
    r.summary += " (witness h = " + cert.witness->to_string() + ", phi(h) = " + phi(*cert.witness).to_string() +
                 " not in ideal)";
  }
  r.summary += "\n";
  r.exit_code = cert.verdict ? 0 : 1;
  return r;
}

CommandResult enumerate_cmd(const Scenario& sc, const Args& a) {
  const Splitting& phi = need_splitting(sc);
  bool exclude_zero = a.has_flag("--exclude-zero") || truthy(lookup(sc, {}, "exclude-zero"));
  bool exclude_unit = a.has_flag("--exclude-unit") || truthy(lookup(sc, {}, "exclude-unit"));
  CommandResult r;
  IdealLattice L{phi, {}, {}, false, {}, 0};
  std::string mode;
  if (a.has_flag("--brute-force")) {
    if (a.options.contains("--seeds")) throw UsageError("--seeds and --brute-force are exclusive");
    mode = "brute-force";
    L = brute_force_toric(phi);
  } else {
    mode = "closure";
    std::vector<Ideal> seeds;
    if (auto s = a.options.find("--seeds"); s != a.options.end()) {
      std::stringstream ss(s->second);
      for (std::string name; std::getline(ss, name, ',');) {
        const ScenarioIdeal* entry = sc.find_ideal(name);
        if (!entry) throw UsageError("unknown ideal '" + name + "'");
        seeds.push_back(entry->ideal(sc.ring));
      }
    } else {
      for (const auto& entry : sc.ideals) seeds.push_back(entry.ideal(sc.ring));
    }
    if (seeds.empty()) throw UsageError("enumerate needs seed ideals");
    try {
      L = enumerate_closure(seeds, phi);
    } catch (const SeedNotCompatible& e) {
      r.report["result"] = {{"mode", mode}, {"error", "seed not compatible"},
                            {"seed", e.seed_key}, {"witness", e.witness_text}};
      r.summary = std::string(e.what()) + "\n";
      r.exit_code = 1;
      return r;
    }
  }
  r.report["result"] = lattice_json(L, exclude_zero, exclude_unit);
  r.report["result"]["mode"] = mode;
  r.summary = std::to_string(r.report["result"]["count"].get<std::size_t>()) +
              " compatibly split ideals (" + mode + (L.partial ? ", partial" : "") + "):\n" +
              members_text(L, exclude_zero, exclude_unit);
  return r;
}

CommandResult hilbert_cmd(const Scenario& sc, const Args& a) {
  Ideal I = need_ideal(sc, a);
  if (!I.is_graded()) throw PreconditionError("Hilbert function of a non-graded ideal");
  long long upto = 8;
  if (auto v = lookup(sc, a, "max-n")) upto = to_int(*v, "--max-n");
  std::optional<long long> window;
  if (auto v = lookup(sc, a, "window")) window = to_int(*v, "--window");
  json values = json::array();
  std::ostringstream hf;
  for (long long n = 0; n <= upto; ++n) {
    long long h = hilbert_function(I, n);
    values.push_back(h);
    hf << (n ? " " : "") << h;
  }
  Ideal S = saturate(I);
  CommandResult r;
  r.report["result"] = {{"ideal", a.positional[0]}, {"basis", ideal_json(I)}, {"hilbert_function", values},
                        {"saturated", S == I}, {"saturation", ideal_json(S)}};
  r.summary = a.positional[0] + " = " + I.to_string() + "\n  h(0.." + std::to_string(upto) + ") = " + hf.str() + "\n";
  try {
    HilbertPolynomial hp = hilbert_polynomial(S, window);
    r.report["result"]["hilbert_polynomial"] = hp.to_string();
    r.summary += "  Hilbert polynomial of the saturation: " + hp.to_string() + "\n";
  } catch (const WindowTooSmall& e) {
    r.report["result"]["hilbert_polynomial"] = nullptr;
    r.report["result"]["note"] = e.what();
    r.summary += std::string("  ") + e.what() + "\n";
  }
  return r;
}

CommandResult rigidity_cmd(const Scenario& sc, const Args& a) {
  const Splitting& phi = need_splitting(sc);
  Ideal I = need_ideal(sc, a);
  std::optional<long long> bound;
  if (auto v = lookup(sc, a, "degree-bound")) bound = to_int(*v, "--degree-bound");
  CommandResult r;
  auto cert = is_compatible(phi, I);
  if (!cert.verdict) {
    r.report["result"] = {{"ideal", a.positional[0]}, {"error", "not compatibly split"},
                          {"witness", cert.witness->to_string()}};
    r.summary = a.positional[0] + " is not compatibly split (witness " + cert.witness->to_string() + ")\n";
    r.exit_code = 1;
    return r;
  }
  RigidityReport rep = rigidity_report(I, phi, bound);
  json elems = json::array();
  for (const auto& e : rep.constraint_elements) elems.push_back(e.to_string());
  r.report["result"] = {{"ideal", a.positional[0]},
                        {"basis", ideal_json(I)},
                        {"dim_hom", rep.dim_hom},
                        {"dim_intertwined", rep.dim_intertwined},
                        {"degree_bound", rep.degree_bound},
                        {"saturated", rep.saturated},
                        {"constraint_elements", elems},
                        {"certified", rep.certified()}};
  r.summary = "dim_hom=" + std::to_string(rep.dim_hom) + " dim_intertwined=" + std::to_string(rep.dim_intertwined) +
              "\n";
  if (!rep.certified()) {
    r.report["result"]["note"] = "inconclusive: increase degree_bound";
    r.summary += "inconclusive: increase degree_bound\n";
    r.exit_code = 1;
  }
  return r;
}

CommandResult phi_check_cmd(const Scenario& sc, const Args& a) {
  const Splitting& phi = need_splitting(sc);
  Ideal I = need_ideal(sc, a);
  auto v = lookup(sc, a, "N");
  if (!v) throw UsageError("phi-check needs --N");
  long long N = to_int(*v, "--N");
  if (N < 0) throw UsageError("--N must be nonnegative");
  bool ok = phi_membership(I, phi, N);
  CommandResult r;
  r.report["result"] = {{"ideal", a.positional[0]}, {"N", N}, {"member", ok},
                        {"reading", "condition checked on the subspace I_N of R_N"}};
  r.summary = a.positional[0] + " at N=" + std::to_string(N) + ": phi-member=" + (ok ? "true" : "false") + "\n";
  r.exit_code = ok ? 0 : 1;
  return r;
}

CommandResult fixed_points_cmd(const Scenario& sc, const Args& a) {
  const Splitting& phi = need_splitting(sc);
  auto f_text = lookup(sc, a, "hilbert");
  if (!f_text) throw UsageError("fixed-points needs --hilbert <polynomial in n>");
  HilbertPolynomial f;
  try {
    f = parse_hilbert_polynomial(*f_text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("bad --hilbert: ") + e.what());
  }
  bool toric = phi.premultiplier().is_term() && phi.ring().arity() <= 4;
  IdealLattice L{phi, {}, {}, false, {}, 0};
  if (toric) {
    L = brute_force_toric(phi);
  } else {
    std::vector<Ideal> seeds;
    for (const auto& entry : sc.ideals) seeds.push_back(entry.ideal(sc.ring));
    if (seeds.empty()) throw UsageError("non-toric splitting: fixed-points needs seed ideals");
    L = enumerate_closure(seeds, phi);
  }
  auto hits = filter_by_hilbert(L, f);
  json members = json::array();
  std::string text;
  for (const auto& I : hits) {
    members.push_back(ideal_json(I));
    text += "  " + I.to_string() + "\n";
  }
  CommandResult r;
  r.report["result"] = {{"hilbert_polynomial", f.to_string()},
                        {"mode", toric ? "brute-force" : "closure"},
                        {"partial", L.partial},
                        {"members", members},
                        {"count", hits.size()}};
  r.summary = std::to_string(hits.size()) + " compatibly split ideals with Hilbert polynomial " + f.to_string() +
              ":\n" + text;
  if (toric) {
    json fixed = json::array();
    for (const auto& [P, ok] : torus_fixed_points(phi)) fixed.push_back({{"ideal", ideal_json(P)}, {"compatible", ok}});
    r.report["result"]["torus_fixed_points"] = fixed;
  }
  return r;
}

struct CommandSpec {
  std::function<CommandResult(const Scenario&, const Args&)> run;
  std::vector<std::string> valued;
  std::vector<std::string> boolean;
};

const std::map<std::string, CommandSpec>& commands() {
  static const std::map<std::string, CommandSpec> table{
      {"check-splitting", {check_splitting, {}, {}}},
      {"graded-part", {graded_part_cmd, {}, {}}},
      {"check-compatible", {check_compatible, {}, {}}},
      {"enumerate", {enumerate_cmd, {"--seeds"}, {"--brute-force", "--exclude-zero", "--exclude-unit"}}},
      {"hilbert", {hilbert_cmd, {"--window", "--max-n"}, {}}},
      {"rigidity", {rigidity_cmd, {"--degree-bound"}, {}}},
      {"phi-check", {phi_check_cmd, {"--N"}, {}}},
      {"fixed-points", {fixed_points_cmd, {"--hilbert"}, {}}},
  };
  return table;
}

}  // namespace

CommandResult run_command(const Scenario& sc, const std::vector<std::string>& args) {
  json header = {{"schema_version", kReportSchemaVersion},
                 {"command", args.empty() ? "" : args.front()},
                 {"ring", sc.ring ? sc.ring->to_string() : ""},
                 {"splitting", sc.splitting ? sc.splitting->premultiplier().to_string() : ""}};
  CommandResult r;
  try {
    if (args.empty()) throw UsageError("missing command");
    auto it = commands().find(args.front());
    if (it == commands().end()) throw UsageError("unknown command '" + args.front() + "'");
    Args a = split_args(args, it->second.valued, it->second.boolean);
    r = it->second.run(sc, a);
  } catch (const UsageError& e) {
    r = {std::string("usage error: ") + e.what() + "\n", {{"error", e.what()}}, 2};
  } catch (const PreconditionError& e) {
    r = {std::string("error: ") + e.what() + "\n", {{"error", e.what()}}, 2};
  } catch (const DegreeBoundExceeded& e) {
    r = {std::string("error: ") + e.what() + "\n", {{"error", e.what()}}, 2};
  }
  header.update(r.report);
  r.report = std::move(header);
  r.report["exit_code"] = r.exit_code;
  return r;
}

}  // namespace fsplit
