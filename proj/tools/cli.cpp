#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "szkit/avoid.hpp"
#include "szkit/classes.hpp"
#include "szkit/pit.hpp"
#include "szkit/selftest.hpp"
#include "szkit/szcodec.hpp"

namespace szkit::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::uint64_t cap = std::uint64_t{1} << 22;
  std::size_t bitlen_guard = std::size_t{1} << 20;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::vector<Int> parse_ints(const std::string& text) {
  std::vector<Int> out;
  for (const auto& s : split_list(text)) out.push_back(parse_int(s));
  return out;
}

Point parse_point(const std::string& text) {
  Point out;
  for (const auto& s : split_list(text)) out.push_back(to_u64(parse_int(s)));
  return out;
}

std::string join(const Point& p) {
  std::string s;
  for (std::size_t j = 0; j < p.size(); ++j) s += (j ? "," : "") + std::to_string(p[j]);
  return s;
}

Json ints_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json report(const std::string& command) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

Circuit load_circuit(const std::string& path) { return parse_circuit(read_text_file(path)); }

std::uint64_t require_seed(const Common& c, const std::string& what) {
  if (!c.seed) throw UsageError(what + " is randomized and needs --seed");
  return *c.seed;
}

void emit(std::ostream& out, const Common& c, const Json& j, const std::string& text) {
  if (c.json) out << j.dump(2) << '\n';
  else out << text;
}

Json verdict_json(const PitVerdict& v) {
  Json j;
  j["verdict"] = to_string(v.kind);
  j["provenance"] = to_string(v.provenance);
  j["q"] = v.q;
  j["trials"] = v.trials;
  j["witness"] = v.witness ? Json(*v.witness) : Json(nullptr);
  return j;
}

std::string verdict_text(const PitVerdict& v) {
  std::string s = to_string(v.kind);
  if (v.witness) s += " " + join(*v.witness);
  if (v.kind == VerdictKind::ProbablyZero) s += " (" + std::to_string(v.trials) + " trials)";
  if (v.provenance == Provenance::HittingSet && v.is_zero()) s += " (zero on H)";
  return s + "\n";
}

Json hitting_json(const HittingSet& h) {
  Json j;
  j["n"] = h.n;
  j["q"] = h.q;
  j["r"] = h.r();
  j["distinct"] = h.distinct_count();
  j["points"] = h.points;
  return j;
}

Json hit_verdict_json(const HitVerdict& v) {
  Json j;
  j["hits"] = v.hits;
  j["x"] = v.x ? Json(bits_to_string(*v.x)) : Json(nullptr);
  j["nonroot"] = v.nonroot ? Json(*v.nonroot) : Json(nullptr);
  j["spot_checked"] = v.spot_checked;
  j["members_checked"] = v.members_checked;
  j["nonvanishing"] = v.nonvanishing;
  j["undecided"] = v.undecided;
  return j;
}

// ---------------------------------------------------------------------------

struct Options {
  std::string file;
  std::string at;
  std::string params;
  std::optional<std::size_t> n;
  std::optional<std::size_t> d;
  std::uint64_t q = 0;
  std::string coeffs;
  std::string nonroot;
  std::string point;
  std::string code;
  std::string method = "cube";
  std::uint64_t trials = 40;
  std::string hs_file;
  std::string cls;
  std::size_t s = 4096;
  std::size_t m = 0;
  std::size_t r = 0;
  std::uint64_t budget = 64;
  std::string out_file;
  std::string instance;
  std::optional<std::uint64_t> b;
  std::string via = "hitting";
  std::string schedule = "desk";
};

int cmd_parse(const Common& c, const Options& o, std::ostream& out) {
  Circuit circ = load_circuit(o.file);
  Json j = report("parse");
  j["gates"] = circ.size();
  j["output"] = circ.output();
  j["n_vars"] = circ.n_vars();
  j["n_params"] = circ.n_params();
  j["representation_size"] = representation_size(circ);
  j["text"] = serialize_circuit(circ);
  emit(out, c, j, serialize_circuit(circ));
  return kOk;
}

int cmd_degrees(const Common& c, const Options& o, std::ostream& out) {
  Circuit circ = load_circuit(o.file);
  auto rep = analyze_degrees(circ);
  Json j = report("degrees");
  j["total"] = to_string(rep.total);
  j["max_individual"] = to_string(rep.max_individual);
  Json ind = Json::object();
  std::ostringstream text;
  text << "total " << to_string(rep.total) << "\nmax_individual " << to_string(rep.max_individual) << '\n';
  for (const auto& [name, d] : rep.individual) {
    ind[name] = to_string(d);
    text << name << ' ' << to_string(d) << '\n';
  }
  j["individual"] = ind;
  emit(out, c, j, text.str());
  return kOk;
}

int cmd_eval(const Common& c, const Options& o, std::ostream& out) {
  Circuit circ = load_circuit(o.file);
  Assignment asg{parse_ints(o.at), parse_ints(o.params)};
  Int bound = o.d ? Int(static_cast<unsigned long>(*o.d)) : analyze_degrees(circ).total;
  Int v = eval_arithmetic(circ, asg, bound, EvalLimits{c.bitlen_guard});
  Json j = report("eval");
  j["value"] = to_string(v);
  emit(out, c, j, to_string(v) + "\n");
  return kOk;
}

int cmd_coeffs(const Common& c, const Options& o, std::ostream& out) {
  Circuit circ = load_circuit(o.file);
  std::size_t d = o.d ? *o.d : static_cast<std::size_t>(to_u64(analyze_degrees(plug_parameters(circ)).max_var_individual()));
  UniPoly p = extract_unipoly(circ, d);
  Json j = report("coeffs");
  j["d"] = d;
  j["coeffs"] = ints_json(p.coeffs());
  emit(out, c, j, format_unipoly(p) + "\n");
  return kOk;
}

int cmd_roots(const Common& c, const Options& o, std::ostream& out) {
  if (o.q == 0) throw UsageError("roots needs --q");
  UniPoly p = parse_unipoly(o.coeffs);
  auto roots = enumerate_roots(p, o.q, RootLimits{c.cap});
  Json j = report("roots");
  j["q"] = o.q;
  j["roots"] = roots;
  emit(out, c, j, join(roots) + "\n");
  return kOk;
}

SZContext codec_context(const Common& c, const Options& o) {
  if (o.q == 0) throw UsageError("--q is required");
  if (!o.d) throw UsageError("--d is required");
  Circuit circ = load_circuit(o.file);
  auto a = parse_ints(o.nonroot);
  CodecLimits limits;
  limits.exhaustion_cap = c.cap;
  limits.eval.bitlen_guard = c.bitlen_guard;
  return SZContext(circ, a.size(), *o.d, o.q, a, limits);
}

int cmd_encode(const Common& c, const Options& o, std::ostream& out, std::ostream& err) {
  SZContext ctx = codec_context(c, o);
  if (!ctx.nonroot_ok()) err << "warning: the given non-root is a root; codes default\n";
  RootCode code = encode_root(ctx, parse_point(o.point));
  Json j = report("encode");
  j["nonroot_ok"] = ctx.nonroot_ok();
  j["code"] = format_code(code);
  j["index"] = to_string(pack_code(code, ctx.n(), ctx.d(), ctx.q()));
  emit(out, c, j, format_code(code) + "\n");
  return kOk;
}

int cmd_decode(const Common& c, const Options& o, std::ostream& out, std::ostream& err) {
  SZContext ctx = codec_context(c, o);
  if (!ctx.nonroot_ok()) err << "warning: the given non-root is a root; decoding defaults\n";
  Point p = decode_code(ctx, parse_code(o.code));
  Json j = report("decode");
  j["nonroot_ok"] = ctx.nonroot_ok();
  j["point"] = p;
  emit(out, c, j, join(p) + "\n");
  return kOk;
}

int cmd_pit(const Common& c, const Options& o, std::ostream& out) {
  Circuit circ = plug_parameters(load_circuit(o.file));
  std::size_t n = o.n.value_or(circ.n_vars());
  std::size_t d =
      o.d.value_or(std::max<std::size_t>(1, static_cast<std::size_t>(to_u64(analyze_degrees(circ).max_var_individual()))));
  PitOptions opts;
  opts.exhaustion_cap = c.cap;
  if (o.q) opts.q = o.q;
  PitVerdict v;
  if (o.method == "cube") {
    v = pit_cube_brute(circ, n, d, opts);
  } else if (o.method == "random") {
    v = pit_random(circ, n, d, o.trials, require_seed(c, "pit --method random"), opts);
  } else if (o.method == "hs") {
    if (o.hs_file.empty()) throw UsageError("pit --method hs needs --hs-file");
    v = pit_with_hitting_set(circ, parse_hitting_set(read_text_file(o.hs_file)), opts);
  } else {
    throw UsageError("unknown PIT method '" + o.method + "'");
  }
  Json j = report("pit");
  j["method"] = o.method;
  j["n"] = n;
  j["d"] = d;
  Json vj = verdict_json(v);
  for (auto& [k, val] : vj.items()) j[k] = val;
  emit(out, c, j, verdict_text(v));
  return v.is_zero() ? kOk : kNegative;
}

DefinableClass cli_class(const Options& o) {
  if (o.cls.empty()) throw UsageError("--class is required");
  if (!o.n || !o.d) throw UsageError("--n and --d are required");
  return make_class(o.cls, SliceParams{*o.n, *o.d, o.s, o.m});
}

VerifyOptions verify_options(const Common& c) {
  VerifyOptions v;
  v.exhaustion_cap = c.cap;
  v.seed = c.seed.value_or(0);
  return v;
}

int cmd_hs_search(const Common& c, const Options& o, std::ostream& out) {
  auto cls = cli_class(o);
  if (o.q == 0 || o.r == 0) throw UsageError("--q and --r are required");
  auto res = search_hitting_set(cls, o.q, o.r, require_seed(c, "hs-search"), o.budget, verify_options(c));
  if (!o.out_file.empty()) {
    std::ofstream f(o.out_file);
    if (!f) throw InputError("cannot write '" + o.out_file + "'");
    f << format_hitting_set(res.set);
  }
  Json j = report("hs-search");
  j["class"] = cls.name();
  j["slice"] = {{"n", *o.n}, {"d", *o.d}, {"s", o.s}, {"m", o.m}};
  j["attempts"] = res.attempts;
  j["hitting_set"] = hitting_json(res.set);
  j["verification"] = hit_verdict_json(res.verdict);
  emit(out, c, j, format_hitting_set(res.set));
  return kOk;
}

int cmd_hs_verify(const Common& c, const Options& o, std::ostream& out) {
  auto cls = cli_class(o);
  if (o.hs_file.empty()) throw UsageError("hs-verify needs --hs-file");
  auto h = parse_hitting_set(read_text_file(o.hs_file), o.q ? std::optional<std::uint64_t>(o.q) : std::nullopt);
  auto v = verify_hitting_set(cls, h, verify_options(c));
  Json j = report("hs-verify");
  j["class"] = cls.name();
  j["hitting_set"] = hitting_json(h);
  j["verification"] = hit_verdict_json(v);
  std::string text = v.hits ? "Hits\n" : "Misses x=" + bits_to_string(*v.x) + " nonroot=" + join(*v.nonroot) + "\n";
  if (v.spot_checked) text += "(spot-checked)\n";
  emit(out, c, j, text);
  return v.hits ? kOk : kNegative;
}

AvoidInstance load_instance(const Options& o) {
  if (o.instance.empty()) throw UsageError("avoid needs --instance");
  auto ext = std::filesystem::path(o.instance).extension().string();
  std::string text = read_text_file(o.instance);
  if (ext == ".bc") {
    if (o.b) throw UsageError("--b applies to truth tables only; .bc files carry a codomain line");
    return parse_bc_instance(text);
  }
  return parse_tsv_instance(text, o.b);
}

int cmd_avoid(const Common& c, const Options& o, std::ostream& out) {
  AvoidInstance inst = load_instance(o);
  Json j = report("avoid");
  j["a"] = inst.a;
  j["b"] = inst.b;
  if (o.via == "brute") {
    auto v = solve_avoid_brute(inst, c.cap);
    j["via"] = "brute";
    j["value"] = v;
    emit(out, c, j, std::to_string(v) + "\n");
    return kOk;
  }
  if (o.via != "hitting") throw UsageError("--via must be hitting or brute");
  ScheduleKind kind;
  if (o.schedule == "desk" || o.schedule == "auto") kind = ScheduleKind::Desk;
  else if (o.schedule == "paper") kind = ScheduleKind::Paper;
  else throw UsageError("--schedule must be desk or paper");
  std::uint64_t seed = require_seed(c, "avoid --via hitting");
  ExhaustiveOracle oracle;
  auto tr = avoid_via_hitting(inst, default_hs_solver(seed, o.budget), oracle, kind);
  const auto& p = tr.schedule.params;
  j["via"] = "hitting";
  j["normalize"] = {{"mode", to_string(tr.norm.mode)}, {"m", tr.norm.m}, {"fold", tr.norm.fold},
                    {"g_digest", tr.g_digest}};
  j["schedule"] = {{"name", tr.schedule.name}, {"m", p.m},  {"n", p.n},           {"d", p.d},
                   {"s", p.s},                 {"r", p.r},  {"q", p.q},           {"w", p.w()},
                   {"length", p.length},       {"t", tr.t}, {"violations", tr.schedule.violations}};
  j["amplify"] = {{"h_digest", tr.h_digest}};
  j["class_size"] = tr.class_size;
  j["hitting_set"] = hitting_json(tr.hitting_set);
  j["y"] = bits_to_string(tr.y);
  Json walk = Json::array();
  for (const auto& w : tr.inversion.walk.ws) walk.push_back(bits_to_string(w));
  j["inversion"] = {{"walk_length", tr.inversion.walk.length()},
                    {"walk", walk},
                    {"output", bits_to_string(*tr.inversion.output)},
                    {"oracle_queries", tr.inversion.oracle_queries}};
  j["backmap_queries"] = tr.back.oracle_queries;
  j["value"] = tr.value;
  emit(out, c, j, std::to_string(tr.value) + "\n");
  return kOk;
}

int cmd_selftest(const Common& c, std::ostream& out) {
  auto rows = run_selftest(require_seed(c, "selftest"));
  Json j = report("selftest");
  Json arr = Json::array();
  std::ostringstream text;
  bool all = true;
  for (const auto& r : rows) {
    all = all && r.passed;
    arr.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
    text << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
    if (!r.passed) text << ": " << r.detail;
    text << '\n';
  }
  j["checks"] = arr;
  j["passed"] = all;
  emit(out, c, j, text.str());
  return all ? kOk : kNegative;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schwartz-Zippel toolkit: circuits, root codes, PIT, hitting sets and range avoidance", "szkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  Options o;
  app.add_flag("--json", common.json, "Machine-readable JSON report");
  app.add_option("--seed", common.seed, "Seed for randomized subcommands");
  app.add_option("--cap", common.cap, "Exhaustion cap for brute-force scans");
  app.add_option("--bitlen-guard", common.bitlen_guard, "Maximum bit length of intermediate values");

  auto* parse = app.add_subcommand("parse", "Validate a circuit and print its canonical form");
  parse->add_option("file", o.file, "Circuit (.ac)")->required();

  auto* degrees = app.add_subcommand("degrees", "Syntactic degree report");
  degrees->add_option("file", o.file, "Circuit (.ac)")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a circuit");
  eval->add_option("file", o.file, "Circuit (.ac)")->required();
  eval->add_option("--at", o.at, "Variable values x1,x2,...");
  eval->add_option("--params", o.params, "Parameter values p1,p2,...");
  eval->add_option("--d", o.d, "Degree bound (defaults to the circuit's total degree)");

  auto* coeffs = app.add_subcommand("coeffs", "Coefficients of a univariate circuit");
  coeffs->add_option("file", o.file, "Circuit (.ac)")->required();
  coeffs->add_option("--d", o.d, "Degree bound");

  auto* roots = app.add_subcommand("roots", "Roots of a polynomial in {0,...,q-1}");
  roots->add_option("--q", o.q, "Side length q")->required();
  roots->add_option("coeffs", o.coeffs, "Coefficients, lowest degree first")->required();

  auto* encode = app.add_subcommand("encode", "Encode a root of a circuit");
  encode->add_option("file", o.file, "Circuit (.ac)")->required();
  encode->add_option("--nonroot", o.nonroot, "The fixed point a")->required();
  encode->add_option("--q", o.q)->required();
  encode->add_option("--d", o.d)->required();
  encode->add_option("--point", o.point, "The root b in S_q^n")->required();

  auto* decode = app.add_subcommand("decode", "Decode a root code");
  decode->add_option("file", o.file, "Circuit (.ac)")->required();
  decode->add_option("--nonroot", o.nonroot, "The fixed point a")->required();
  decode->add_option("--q", o.q)->required();
  decode->add_option("--d", o.d)->required();
  decode->add_option("--code", o.code, "Code k:i:c1,c2,...")->required();

  auto* pit = app.add_subcommand("pit", "Polynomial identity test");
  pit->add_option("file", o.file, "Circuit (.ac)")->required();
  pit->add_option("--method", o.method, "cube|random|hs");
  pit->add_option("--trials", o.trials);
  pit->add_option("--hs-file", o.hs_file);
  pit->add_option("--n", o.n, "Dimension (defaults to the number of variables)");
  pit->add_option("--d", o.d, "Individual degree bound (defaults to the circuit's)");
  pit->add_option("--q", o.q, "Enlarged side length (at least 2nd)");

  auto add_class_opts = [&](CLI::App* sub) {
    sub->add_option("--class", o.cls, "builtin:grid|builtin:zero|builtin:all|file:a.ac,b.ac")->required();
    sub->add_option("--n", o.n)->required();
    sub->add_option("--d", o.d)->required();
    sub->add_option("--s", o.s);
    sub->add_option("--m", o.m);
    sub->add_option("--q", o.q);
  };
  auto* hs_search = app.add_subcommand("hs-search", "Search for a hitting set");
  add_class_opts(hs_search);
  hs_search->add_option("--r", o.r)->required();
  hs_search->add_option("--budget", o.budget);
  hs_search->add_option("--out", o.out_file, "Write the hitting set to this file");

  auto* hs_verify = app.add_subcommand("hs-verify", "Verify a hitting set");
  add_class_opts(hs_verify);
  hs_verify->add_option("--hs-file", o.hs_file)->required();

  auto* avoid = app.add_subcommand("avoid", "Find a value outside the range of f : [a] -> [b]");
  avoid->add_option("--instance", o.instance, "Truth table (.tsv) or Boolean circuit (.bc)")->required();
  avoid->add_option("--b", o.b, "Codomain size for truth tables (default 2a)");
  avoid->add_option("--via", o.via, "hitting|brute");
  avoid->add_option("--schedule", o.schedule, "desk|paper");
  avoid->add_option("--budget", o.budget, "Hitting-set search attempts");

  auto* selftest = app.add_subcommand("selftest", "Run the desk-scale invariant suites");

  std::vector<const char*> argv{"szkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (parse->parsed()) return cmd_parse(common, o, out);
    if (degrees->parsed()) return cmd_degrees(common, o, out);
    if (eval->parsed()) return cmd_eval(common, o, out);
    if (coeffs->parsed()) return cmd_coeffs(common, o, out);
    if (roots->parsed()) return cmd_roots(common, o, out);
    if (encode->parsed()) return cmd_encode(common, o, out, err);
    if (decode->parsed()) return cmd_decode(common, o, out, err);
    if (pit->parsed()) return cmd_pit(common, o, out);
    if (hs_search->parsed()) return cmd_hs_search(common, o, out);
    if (hs_verify->parsed()) return cmd_hs_verify(common, o, out);
    if (avoid->parsed()) return cmd_avoid(common, o, out);
    if (selftest->parsed()) return cmd_selftest(common, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const GuardError& e) {
    err << "guard tripped: " << e.what() << '\n';
    return kGuard;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kGuard;
  }
  err << "usage error: no subcommand\n";
  return kUsage;
}

}  // namespace szkit::cli
