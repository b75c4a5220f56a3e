#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "gluckkit/correction_terms.hpp"
#include "gluckkit/errors.hpp"
#include "gluckkit/semigroup.hpp"
#include "gluckkit/skein.hpp"
#include "gluckkit/surgery_diagram.hpp"

namespace gluckkit::cli {
namespace {

using nlohmann::json;

// Limits that keep a single run at desk scale.
constexpr std::int64_t kMaxVIndex = std::int64_t{1} << 26;

// Flags whose manifest value is "true" rather than an operand.
const std::set<std::string> kFlagArguments = {"all", "gluck", "check-invariance"};

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json rational_json(const Rational& r) {
  return {{"num", integer_json(r.numerator())}, {"den", integer_json(r.denominator())}};
}

json polynomial_json(const LaurentPolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, integer_json(c)});
  return terms;
}

template <class Tag>
json coefficients_json(const BasisVector<Tag>& v) {
  json out = json::object();
  for (const auto& [i, c] : v.coefficients()) out[std::to_string(i)] = polynomial_json(c);
  return out;
}

json diagram_json(const DiagramClass& d) { return {{"w", d.w}, {"f", d.f}}; }

json action_json(const HomologyAction& a) {
  return {{"m_image", {a.at(0, 0), a.at(1, 0)}}, {"h_image", {a.at(0, 1), a.at(1, 1)}}};
}

json violation_json(const Violation& v) {
  return {{"i", v.i}, {"image", v.image}, {"d_i", rational_json(v.d_i)}, {"d_image", rational_json(v.d_image)}};
}

json report_json(const ObstructionReport& r) {
  json table = json::array();
  for (const auto& d : r.d_table) table.push_back(rational_json(d));
  json branches = json::array();
  for (const auto& b : r.branches) {
    json vs = json::array();
    for (const auto& v : b.violations) vs.push_back(violation_json(v));
    branches.push_back({{"base", b.base}, {"violations", vs}});
  }
  json violations = json::array();
  for (const auto& v : r.violations()) violations.push_back(violation_json(v));
  return {{"w", r.w},
          {"n", r.n},
          {"label", r.label},
          {"multiplier", r.multiplier},
          {"d_table", table},
          {"spin_distinguished", r.spin_distinguished},
          {"branches", branches},
          {"violations", violations},
          {"verdict", to_string(r.verdict)}};
}

const char* framing_kind(FramingSolution::Kind kind) {
  switch (kind) {
    case FramingSolution::Kind::None: return "none";
    case FramingSolution::Kind::Unique: return "unique";
    case FramingSolution::Kind::AllIntegers: return "all_integers";
  }
  return "none";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

struct Run {
  std::string subcommand;
  std::map<std::string, std::string> arguments;
  int status = kOk;
  json result;
};

json convention_flags() {
  return {{"smoothing", to_string(kDefaultSmoothing)}, {"gluck_twist", "right-handed"}};
}

json manifest_json(const Run& run) {
  return {{"subcommand", run.subcommand},
          {"arguments", run.arguments},
          {"convention_flags", convention_flags()},
          {"tool_version", kToolVersion}};
}

std::string polynomial_from_pairs(const json& pairs) {
  std::vector<std::pair<Exponent, Integer>> terms;
  for (const auto& pair : pairs) {
    const Integer c = pair[1].is_string() ? Integer(pair[1].get<std::string>()) : Integer(pair[1].get<long>());
    terms.emplace_back(pair[0].get<Exponent>(), c);
  }
  return LaurentPolynomial::from_terms(terms).to_string();
}

bool is_rational(const json& j) {
  return j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den");
}

bool is_polynomial(const json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer()) return false;
    if (!pair[1].is_number_integer() && !pair[1].is_string()) return false;
  }
  return true;
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void flatten_into(const json& j, const std::string& path, std::map<std::string, std::string>& rows) {
  if (is_rational(j)) {
    rows[path] = scalar_text(j["num"]) + "/" + scalar_text(j["den"]);
  } else if (is_polynomial(j)) {
    rows[path] = polynomial_from_pairs(j);
  } else if (j.is_object() && !j.empty()) {
    for (const auto& [key, value] : j.items()) flatten_into(value, path.empty() ? key : path + "." + key, rows);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten_into(j[i], path + "." + std::to_string(i), rows);
  } else {
    rows[path] = scalar_text(j);
  }
}

std::string render(const json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  std::string out = "path\tvalue\n";
  for (const auto& [path, value] : flatten(doc)) out += path + "\t" + value + "\n";
  return out;
}

// ---- subcommands ----------------------------------------------------------

struct VseqOptions {
  std::int64_t p = 0, q = 0, max = 0;
};

void run_vseq(const VseqOptions& o, Run& run) {
  if (o.max < 0) throw PreconditionError("vseq: --max must be non-negative");
  if (o.max > kMaxVIndex) throw PreconditionError("vseq: --max must be at most 2^26");
  const VSequence v = v_sequence(TorusKnotParams(o.p, o.q), o.max);
  run.result = v.prefix(static_cast<std::size_t>(o.max) + 1);
}

struct DinvOptions {
  std::int64_t p = 0, q = 0, n = 0, spinc = 0;
  bool all = false;
  bool has_spinc = false;
};

void run_dinv(const DinvOptions& o, Run& run) {
  const TorusKnotParams t(o.p, o.q);
  SpinCLabel(o.n, 0);  // rejects n <= 0 before any work
  if (o.n > kMaxVIndex) throw PreconditionError("dinv: --n must be at most 2^26");
  const SurgeryDescriptor s{v_sequence(t, 0), o.n,
                            "T_{" + std::to_string(o.p) + "," + std::to_string(o.q) + "}"};
  std::vector<std::int64_t> labels;
  if (o.has_spinc) {
    labels.push_back(SpinCLabel(o.n, o.spinc).i());
  } else {
    labels.resize(static_cast<std::size_t>(o.n));
    std::iota(labels.begin(), labels.end(), 0);
  }
  json values = json::array();
  for (std::int64_t i : labels) {
    values.push_back({{"spinc", i}, {"d", rational_json(d_surgery(s, i))}, {"d_lens", rational_json(d_lens(o.n, i))}});
  }
  run.result = {{"label", s.label}, {"n", o.n}, {"values", values}};
}

struct ObstructOptions {
  std::int64_t w = 0;
  std::string expect;
};

void run_obstruct(const ObstructOptions& o, Run& run) {
  const ObstructionReport report = obstruct_even_gluck(o.w);
  run.result = report_json(report);
  if (!o.expect.empty()) {
    const std::map<std::string, Verdict> expected = {{"obstructed", Verdict::Obstructed},
                                                     {"not-obstructed", Verdict::NotObstructed},
                                                     {"inconclusive", Verdict::Inconclusive}};
    if (expected.at(o.expect) != report.verdict) run.status = kExpectationFailed;
  }
}

struct FramingOptions {
  std::int64_t w = 0, f = 0;
  std::vector<std::string> ops;
};

void run_framing(const FramingOptions& o, Run& run) {
  DiagramMove state{{o.w, o.f}, HomologyAction::identity()};
  json steps = json::array();
  for (const auto& op : o.ops) {
    const DiagramMove move = op == "gluck" ? gluck_twist(state.diagram) : handleslide(state.diagram, op == "slide+" ? 1 : -1);
    state = {move.diagram, move.action.after(state.action)};
    steps.push_back({{"op", op}, {"diagram", diagram_json(state.diagram)}, {"action", action_json(state.action)}});
  }
  const FramingSolution solution = solve_framing_equation(o.w);
  json equation = {{"kind", framing_kind(solution.kind)}};
  if (solution.kind == FramingSolution::Kind::Unique) equation["k"] = solution.k;
  run.result = {{"initial", diagram_json({o.w, o.f})},
                {"steps", steps},
                {"final", diagram_json(state.diagram)},
                {"action", action_json(state.action)},
                {"framing_equation", equation},
                {"odd_winding_verdict", o.w % 2 != 0 ? json(to_string(odd_winding_verdict(o.w))) : json(nullptr)}};
}

struct HomologyOptions {
  std::int64_t w = 0, f = 0, action = 0;
  bool has_action = false;
};

void run_homology(const HomologyOptions& o, Run& run) {
  const FirstHomology h = surgery_homology({o.w, o.f});
  json factors = json::array();
  for (const auto& factor : h.invariant_factors) factors.push_back(integer_json(factor));
  run.result = {{"free_rank", h.free_rank}, {"factors", factors}};
  if (o.has_action) {
    const auto c = homology_action_on_generator({o.w, o.f}, o.action);
    run.result["generator_multiplier"] = c ? integer_json(c->multiplier) : json(nullptr);
  }
}

struct BracketOptions {
  int strands = 0;
  std::string braid;
  std::string basis = "z";
  bool gluck = false;
  std::int64_t twists = 0;
  bool check_invariance = false;
};

void run_bracket(const BracketOptions& o, Run& run) {
  const BraidWord word = BraidWord::parse(o.strands, o.braid);
  const SolidTorusElement bracket = framing_twist(bracket_of_closure(word), o.twists);
  json coefficients;
  if (o.basis == "eprime") {
    SkeinElement x = to_skein(bracket);
    if (o.gluck) x = gluck_action(x);
    coefficients = coefficients_json(x.vector());
  } else {
    EBasisElement e = z_to_e(bracket);
    if (o.gluck) e = gluck_action(e);
    coefficients = o.basis == "e" ? coefficients_json(e) : coefficients_json(e_to_z(e));
  }
  run.result = {{"basis", o.basis}, {"coefficients", coefficients}};
  if (o.check_invariance) {
    const Parity parity = o.strands % 2 == 0 ? Parity::Even : Parity::Odd;
    const InvarianceCheck check = verify_gluck_invariance(to_skein(bracket), parity);
    run.result["invariance"] = {{"parity", to_string(parity)},
                                {"holds", check.holds},
                                {"f_used", check.f_used ? json(*check.f_used) : json(nullptr)}};
  }
}

// Rebuilds a command line from a manifest.
std::vector<std::string> replay_arguments(const json& doc) {
  const json& m = doc.contains("manifest") ? doc.at("manifest") : doc;
  if (m.at("tool_version").get<std::string>() != kToolVersion) {
    throw PreconditionError("replay: manifest was written by tool version " +
                            m.at("tool_version").get<std::string>() + ", this is " + kToolVersion);
  }
  if (m.at("convention_flags") != convention_flags()) {
    throw PreconditionError("replay: manifest conventions " + m.at("convention_flags").dump() +
                            " differ from this build's " + convention_flags().dump());
  }
  const std::string sub = m.at("subcommand").get<std::string>();
  if (sub == "replay") throw PreconditionError("replay: manifest may not name replay itself");
  std::vector<std::string> args{sub};
  for (const auto& [key, value] : m.at("arguments").items()) {
    const std::string text = value.get<std::string>();
    if (kFlagArguments.count(key)) {
      if (text == "true") args.push_back("--" + key);
    } else if (key == "op") {
      std::stringstream ops(text);
      for (std::string op; std::getline(ops, op, ',');) {
        args.push_back("--op");
        args.push_back(op);
      }
    } else {
      args.push_back("--" + key);
      args.push_back(text);
    }
  }
  return args;
}

std::string canonical_braid(const std::string& text, int strands) {
  const BraidWord word = BraidWord::parse(strands, text);
  std::vector<std::string> parts;
  for (int letter : word.letters()) parts.push_back(std::to_string(letter));
  return join(parts, " ");
}

}  // namespace

std::map<std::string, std::string> flatten(const json& doc) {
  std::map<std::string, std::string> rows;
  flatten_into(doc, "", rows);
  return rows;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certificate checker for Gluck-twist obstructions and skein computations", "gluckkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string format = "json";
  if (const char* env = std::getenv("GLUCKKIT_FORMAT"); env && *env) format = env;
  std::string output_path;
  app.add_option("--format", format, "Report format (default json, or $GLUCKKIT_FORMAT)");
  app.add_option("--output", output_path, "Write the report to PATH instead of stdout");

  auto add_sub = [&](const char* name, const char* description) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->fallthrough();
    return sub;
  };

  VseqOptions vseq;
  CLI::App* vseq_cmd = add_sub("vseq", "V-sequence of the torus knot T(p,q)");
  vseq_cmd->add_option("--p", vseq.p)->required();
  vseq_cmd->add_option("--q", vseq.q)->required();
  vseq_cmd->add_option("--max", vseq.max, "Largest index")->required();

  DinvOptions dinv;
  CLI::App* dinv_cmd = add_sub("dinv", "Correction terms of n-surgery on T(p,q)");
  dinv_cmd->add_option("--p", dinv.p)->required();
  dinv_cmd->add_option("--q", dinv.q)->required();
  dinv_cmd->add_option("--n", dinv.n, "Positive surgery coefficient")->required();
  CLI::Option* spinc_opt = dinv_cmd->add_option("--spinc", dinv.spinc, "Single Spin^c label");
  CLI::Option* all_opt = dinv_cmd->add_flag("--all", dinv.all, "Every Spin^c label (default)");
  spinc_opt->excludes(all_opt);

  ObstructOptions obstruct;
  CLI::App* obstruct_cmd = add_sub("gluck-obstruct", "Even-winding Gluck obstruction for K_w");
  obstruct_cmd->add_option("--w", obstruct.w, "Even winding number")->required();
  obstruct_cmd->add_option("--expect", obstruct.expect, "Exit 1 unless the verdict matches")
      ->check(CLI::IsMember({"obstructed", "not-obstructed", "inconclusive"}));

  FramingOptions framing;
  CLI::App* framing_cmd = add_sub("framing", "Apply Gluck twists and handleslides to a diagram class");
  framing_cmd->add_option("--w", framing.w)->required();
  framing_cmd->add_option("--f", framing.f)->required();
  framing_cmd->add_option("--op", framing.ops, "gluck, slide+ or slide- (repeatable, left to right)")
      ->check(CLI::IsMember({"gluck", "slide+", "slide-"}))
      ->allow_extra_args(false);

  HomologyOptions homology;
  CLI::App* homology_cmd = add_sub("homology", "First homology of the surgered manifold");
  homology_cmd->add_option("--w", homology.w)->required();
  homology_cmd->add_option("--f", homology.f)->required();
  CLI::Option* action_opt = homology_cmd->add_option("--action", homology.action, "Handleslide count k");

  BracketOptions bracket;
  CLI::App* bracket_cmd = add_sub("bracket", "Kauffman bracket of a braid closure in the solid torus");
  bracket_cmd->add_option("--strands", bracket.strands)->required();
  bracket_cmd->add_option("--braid", bracket.braid, "Letters such as \"1 1 -2\"")->required();
  bracket_cmd->add_option("--basis", bracket.basis)->check(CLI::IsMember({"z", "e", "eprime"}));
  bracket_cmd->add_flag("--gluck", bracket.gluck, "Apply the Gluck action");
  bracket_cmd->add_option("--twists", bracket.twists, "Framing twists");
  bracket_cmd->add_flag("--check-invariance", bracket.check_invariance);

  std::string manifest_path;
  CLI::App* replay_cmd = add_sub("replay", "Re-run the command recorded in a report or manifest");
  replay_cmd->add_option("--manifest", manifest_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);  // --help / --version
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (format != "json" && format != "tsv") {
    err << "error: format must be json or tsv (got '" << format << "')\n";
    return kInputError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Run run;
  run.subcommand = chosen->get_name();
  try {
    if (chosen == replay_cmd) {
      std::ifstream in(manifest_path);
      if (!in) throw PreconditionError("replay: cannot read manifest " + manifest_path);
      json doc;
      try {
        doc = json::parse(in);
      } catch (const json::exception& e) {
        throw PreconditionError("replay: manifest is not valid JSON: " + std::string(e.what()));
      }
      std::vector<std::string> again;
      try {
        again = replay_arguments(doc);
      } catch (const json::exception& e) {
        throw PreconditionError("replay: malformed manifest: " + std::string(e.what()));
      }
      again.insert(again.end(), {"--format", format});
      if (!output_path.empty()) again.insert(again.end(), {"--output", output_path});
      return dispatch(again, out, err);
    }

    // Canonical strings for every argument that was given.
    for (const CLI::Option* opt : chosen->get_options()) {
      if (opt->count() == 0 || opt->get_name() == "--help") continue;
      std::string key = opt->get_name();
      key.erase(0, key.find_first_not_of('-'));
      if (kFlagArguments.count(key)) {
        run.arguments[key] = "true";
      } else if (key == "op") {
        run.arguments[key] = join(opt->results(), ",");
      } else if (key == "braid") {
        run.arguments[key] = canonical_braid(bracket.braid, bracket.strands);
      } else {
        run.arguments[key] = opt->as<std::string>();
      }
    }
    // Integers are re-rendered so "007" and "7" give the same manifest.
    auto canon_int = [&](const char* key, std::int64_t value) {
      if (run.arguments.count(key)) run.arguments[key] = std::to_string(value);
    };

    if (chosen == vseq_cmd) {
      canon_int("p", vseq.p), canon_int("q", vseq.q), canon_int("max", vseq.max);
      run_vseq(vseq, run);
    } else if (chosen == dinv_cmd) {
      dinv.has_spinc = spinc_opt->count() > 0;
      canon_int("p", dinv.p), canon_int("q", dinv.q), canon_int("n", dinv.n), canon_int("spinc", dinv.spinc);
      run_dinv(dinv, run);
    } else if (chosen == obstruct_cmd) {
      canon_int("w", obstruct.w);
      run_obstruct(obstruct, run);
    } else if (chosen == framing_cmd) {
      canon_int("w", framing.w), canon_int("f", framing.f);
      run_framing(framing, run);
    } else if (chosen == homology_cmd) {
      homology.has_action = action_opt->count() > 0;
      canon_int("w", homology.w), canon_int("f", homology.f), canon_int("action", homology.action);
      run_homology(homology, run);
    } else if (chosen == bracket_cmd) {
      canon_int("strands", bracket.strands), canon_int("twists", bracket.twists);
      run_bracket(bracket, run);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }

  const json doc = {{"manifest", manifest_json(run)}, {"result", run.result}};
  const std::string text = render(doc, format);
  if (output_path.empty()) {
    out << text;
  } else {
    std::ofstream file(output_path, std::ios::binary);
    if (!(file << text)) {
      err << "error: cannot write " << output_path << "\n";
      return kInputError;
    }
  }
  if (run.status == kExpectationFailed) {
    err << "expectation failed: verdict is " << run.result.at("verdict").get<std::string>() << ", expected "
        << obstruct.expect << "\n";
  }
  return run.status;
}

}  // namespace gluckkit::cli
