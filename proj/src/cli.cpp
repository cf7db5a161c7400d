// Copyright 2026 The Spreadlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spreadlab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "spreadlab/acceptance.hpp"
#include "spreadlab/badpairs.hpp"
#include "spreadlab/bounds.hpp"
#include "spreadlab/errors.hpp"
#include "spreadlab/fragmentation.hpp"
#include "spreadlab/generators.hpp"
#include "spreadlab/io.hpp"
#include "spreadlab/parallel.hpp"
#include "spreadlab/rng.hpp"
#include "spreadlab/spread.hpp"
#include "spreadlab/threshold.hpp"

namespace spreadlab::cli {

namespace {

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end || text.empty()) throw InputError(what + ": expected a nonnegative integer, got '" + text + "'");
  return v;
}

double parse_double(const std::string& text, const std::string& what) {
  double v = 0;
  const auto* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end || text.empty() || !std::isfinite(v)) {
    throw InputError(what + ": expected a number, got '" + text + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

struct Context {
  Budgets budgets;
  json config;
  std::ostream& out;
  std::ostream& err;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text(path, text);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json options_of(const CLI::App& sub) {
  json opts = json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    const std::string name = opt->get_name();
    if (name == "--help" || name.empty()) continue;
    std::string key = name.substr(name.find_first_not_of('-'));
    if (opt->count() > 0) {
      const auto& res = opt->results();
      if (opt->get_type_size() == 0) {
        opts[key] = true;
      } else {
        std::string joined;
        for (std::size_t i = 0; i < res.size(); ++i) joined += (i ? "," : "") + res[i];
        opts[key] = joined;
      }
    } else if (!opt->get_default_str().empty()) {
      opts[key] = opt->get_default_str();
    }
  }
  return opts;
}

// ---- generate ----

struct GenerateArgs {
  std::string family;
  unsigned n = 0;
  std::optional<unsigned> r;
  std::optional<std::size_t> m;
  std::uint64_t seed = 0;
  std::string f;
  std::string output;
  std::string name;
};

int cmd_generate(const GenerateArgs& a, Context& ctx) {
  Hypergraph h;
  if (a.family == "complete") {
    if (!a.r) throw InputError("generate complete needs --r");
    h = complete_uniform(a.n, *a.r);
  } else if (a.family == "matchings") {
    h = perfect_matchings(a.n);
  } else if (a.family == "hamilton") {
    h = hamilton_cycles(a.n);
  } else if (a.family == "hamilton-sq") {
    h = hamilton_squares(a.n);
  } else if (a.family == "copies") {
    if (a.f.empty()) throw InputError("generate copies needs --f F.json");
    h = copies_of(read_hypergraph(a.f), a.n);
  } else {
    if (!a.r || !a.m) throw InputError("generate random needs --r and --m");
    h = random_hypergraph(a.n, *a.r, *a.m, a.seed);
  }
  if (!a.name.empty()) h = h.with_name(a.name);
  const std::string text = serialize(h);
  if (a.output.empty()) {
    ctx.out << text;
  } else {
    write_text(a.output, text);
    json summary{{"config", ctx.config},
                 {"output", a.output},
                 {"n", h.num_vertices()},
                 {"edges", h.size()},
                 {"name", h.name()}};
    ctx.out << dump(summary);
  }
  return kOk;
}

// ---- certify / min-spread ----

struct CertifyArgs {
  std::string mode = "q";
  std::string q;
  std::vector<std::string> q_list;
  std::vector<unsigned> r_seq;
  std::string input;
  bool exact = false;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
  std::string output;
};

[[noreturn]] void rethrow_with_sampling_hint(const ResourceError& e) {
  throw ResourceError(std::string(e.what()) + "; rerun with --samples N for sampled certification");
}

json min_spread_json(const MinSpread& m) {
  json j = to_json(m);
  if (!m.q.exact()) {
    j["upper"] = to_json(m.q.upper(std::uint64_t{1} << 20));
    j["lower"] = to_json(m.q.strictly_below(std::uint64_t{1} << 20));
  }
  return j;
}

int cmd_certify(const CertifyArgs& a, Context& ctx) {
  if (a.exact && a.samples) throw InputError("--exact and --samples are mutually exclusive");
  const Hypergraph h = read_hypergraph(a.input);
  SpreadProfile profile;
  Rational q;
  if (a.mode == "q") {
    if (a.q.empty()) throw InputError("certify --mode q needs --q");
    q = parse_rational(a.q);
  } else {
    if (a.r_seq.empty()) throw InputError("certify --mode " + a.mode + " needs --r-seq");
    if (a.mode == "tiered") {
      if (a.q.empty()) throw InputError("certify --mode tiered needs --q");
      profile = SpreadProfile::tiered(parse_rational(a.q), a.r_seq);
    } else {
      if (a.q_list.empty()) throw InputError("certify --mode multilevel needs --q-list");
      std::vector<Rational> qs;
      for (const auto& t : a.q_list) qs.push_back(parse_rational(t));
      profile = SpreadProfile::levels(std::move(qs), a.r_seq);
    }
  }

  CertResult result;
  std::optional<MinSpread> min_q;
  if (a.samples) {
    result = a.mode == "q" ? certify_q_spread_sampled(h, q, *a.samples, a.seed)
                           : certify_profile_sampled(h, profile, *a.samples, a.seed);
  } else {
    try {
      if (a.mode == "q") {
        result = certify_q_spread(h, q, ctx.budgets.candidates);
        if (!h.empty()) min_q = min_q_spread(h, ctx.budgets.candidates);
      } else if (a.mode == "tiered") {
        result = certify_tiered(h, profile, ctx.budgets.candidates);
        if (!h.empty()) min_q = min_q_tiered(h, a.r_seq, ctx.budgets.candidates);
      } else {
        result = certify_multilevel(h, profile, ctx.budgets.candidates);
      }
    } catch (const ResourceError& e) {
      rethrow_with_sampling_hint(e);
    }
  }
  json j = to_json(result);
  j["config"] = ctx.config;
  if (min_q) j["min_q"] = min_spread_json(*min_q);
  emit(a.output, dump(j), ctx.out);
  return result.verdict == Verdict::fail ? kVerdictFail : kOk;
}

struct MinSpreadArgs {
  std::string input;
  std::vector<unsigned> r_seq;
  std::string output;
};

int cmd_min_spread(const MinSpreadArgs& a, Context& ctx) {
  const Hypergraph h = read_hypergraph(a.input);
  if (h.empty()) throw InputError("min-spread needs a non-empty hypergraph");
  MinSpread m;
  try {
    m = a.r_seq.empty() ? min_q_spread(h, ctx.budgets.candidates) : min_q_tiered(h, a.r_seq, ctx.budgets.candidates);
  } catch (const ResourceError& e) {
    rethrow_with_sampling_hint(e);
  }
  json j{{"config", ctx.config}, {"mode", a.r_seq.empty() ? "q" : "tiered"}, {"min_q", min_spread_json(m)}};
  emit(a.output, dump(j), ctx.out);
  return kOk;
}

// ---- fragment ----

struct FragmentArgs {
  std::string input;
  std::vector<unsigned> r_seq;
  std::string q;
  std::string c;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
  bool check = false;
  std::string output;
};

json trace_check_json(const TraceCheck& c) {
  return json{{"provenance_injective", c.provenance_injective},
              {"provenance_contains", c.provenance_contains},
              {"uniform", c.uniform},
              {"transfer", c.transfer},
              {"m_monotone", c.m_monotone},
              {"size_product", c.size_product},
              {"ok", c.ok()},
              {"problems", c.problems}};
}

json fragment_record(const Hypergraph& h, const FragmentArgs& a, const Rational& q, const Rational& c,
                     std::uint64_t seed, const Budgets& budgets, bool& checks_ok) {
  const FragmentationTrace trace = run_fragmentation(h, a.r_seq, q, c, seed);
  json j{{"trace", to_json(trace)}};
  if (a.check) {
    const TraceCheck tc = check_trace_invariants(h, trace);
    json pres = json::array();
    bool pres_ok = true;
    for (const auto& e : check_spread_preservation(h, trace, q, budgets.candidates)) {
      pres.push_back(to_json(e));
      if (e.status == PreservationStatus::fail) pres_ok = false;
    }
    j["invariants"] = trace_check_json(tc);
    j["preservation"] = pres;
    checks_ok = checks_ok && tc.ok() && pres_ok;
  }
  return j;
}

int cmd_fragment(const FragmentArgs& a, Context& ctx) {
  const Hypergraph h = read_hypergraph(a.input);
  const Rational q = parse_rational(a.q, true);
  const Rational c = parse_rational(a.c, true);
  if (a.trials == 0) throw InputError("--trials must be positive");
  bool checks_ok = true;
  std::string text;
  if (a.trials == 1) {
    json j = fragment_record(h, a, q, c, a.seed, ctx.budgets, checks_ok);
    j["config"] = ctx.config;
    text = dump(j);
  } else {
    text = json{{"config", ctx.config}}.dump() + "\n";
    for (std::uint64_t i = 0; i < a.trials; ++i) {
      const std::uint64_t s = derive_seed(a.seed, i);
      json j = fragment_record(h, a, q, c, s, ctx.budgets, checks_ok);
      j["trial"] = i;
      j["seed"] = s;
      text += j.dump() + "\n";
    }
  }
  emit(a.output, text, ctx.out);
  return checks_ok ? kOk : kVerdictFail;
}

// ---- badpairs / expectation ----

struct BadPairsArgs {
  std::string input;
  unsigned k = 0;
  std::string c = "4";
  std::string q;
  unsigned pn = 0;
  bool allow_unmet = false;
  std::string output;
};

int cmd_badpairs(const BadPairsArgs& a, Context& ctx) {
  const Hypergraph h = read_hypergraph(a.input);
  BadPairParams params;
  params.c = parse_rational(a.c);
  params.q = parse_rational(a.q);
  params.k = a.k;
  params.pn = a.pn;
  const BadPairReport report = count_bad_pairs(h, params, !a.allow_unmet, ctx.budgets.pairs);
  const bool bound_applicable = report.hypotheses.all();
  bool ok = report.counting_checks_hold();
  if (bound_applicable) {
    ok = ok && report.within_bound;
    for (const auto& row : report.rows) ok = ok && row.pathological_holds;
  }
  json j{{"config", ctx.config},
         {"report", to_json(report)},
         {"bound_applicable", bound_applicable},
         {"verdict", ok ? "pass" : "fail"}};
  emit(a.output, dump(j), ctx.out);
  return ok ? kOk : kVerdictFail;
}

struct ExpectationArgs {
  std::string input;
  std::optional<std::size_t> edge;
  std::vector<unsigned> set;
  unsigned w = 0;
  unsigned k = 0;
  bool oracle = false;
  std::string output;
};

int cmd_expectation(const ExpectationArgs& a, Context& ctx) {
  const Hypergraph h = read_hypergraph(a.input);
  if (a.edge.has_value() == !a.set.empty()) throw InputError("give exactly one of --edge and --set");
  VertexSet s;
  if (a.edge) {
    if (*a.edge >= h.size()) throw InputError("--edge index out of range");
    s = h.edge(*a.edge);
  } else {
    s = VertexSet::from_unsorted(std::vector<Vertex>(a.set.begin(), a.set.end()));
    h.validate(s);
  }
  const Rational value = expected_S(h, s, a.w, a.k);
  json j{{"config", ctx.config}, {"S", to_json(s)}, {"value", to_json(value)}};
  bool agree = true;
  if (a.oracle) {
    const Rational o = expected_S_oracle(h, s, a.w, a.k, ctx.budgets.enumeration);
    agree = o == value;
    j["oracle"] = to_json(o);
    j["agree"] = agree;
  }
  emit(a.output, dump(j), ctx.out);
  return agree ? kOk : kVerdictFail;
}

// ---- threshold / bounds ----

struct ThresholdArgs {
  std::string input;
  std::vector<std::size_t> sizes;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  bool exact = false;
  std::string bounds;
  double confidence = 0.95;
  std::string format = "csv";
  std::string output;
};

std::vector<unsigned> parse_unsigned_list(const std::string& text, const std::string& what) {
  std::vector<unsigned> v;
  for (const auto& t : split(text, ',')) v.push_back(static_cast<unsigned>(parse_u64(t, what)));
  return v;
}

BoundParams bound_params_from(const std::string& text) {
  BoundParams p;
  if (text.empty()) return p;
  for (const auto& [key, value] : parse_key_values(text)) {
    if (key == "C") {
      p.c = parse_double(value, "C");
    } else if (key == "l") {
      p.levels = static_cast<unsigned>(parse_u64(value, "l"));
    } else if (key == "q") {
      p.q = parse_double(value, "q");
    } else if (key == "rseq") {
      p.r_sequence = parse_unsigned_list(value, "rseq");
    } else if (key == "K0") {
      p.k0 = parse_double(value, "K0");
    } else if (key == "qs") {
      for (const auto& t : split(value, ',')) p.q_levels.push_back(parse_double(t, "qs"));
    } else {
      throw InputError("unknown bound key '" + key + "' (expected C, l, q, rseq, K0, qs)");
    }
  }
  return p;
}

bool same_size(std::size_t size, double target) {
  return target >= 0 && static_cast<double>(size) == std::floor(target + 1e-9);
}

// Which set-size regimes `size` matches: C l q n, 2 C l q n, C (q_1 + ... + q_l) n.
std::vector<std::string> regimes(std::size_t size, std::size_t n, const BoundParams& p) {
  std::vector<std::string> out;
  const unsigned levels = p.levels.value_or(static_cast<unsigned>(p.r_sequence.size()));
  if (p.c && p.q && levels > 0) {
    const double base = *p.c * levels * *p.q * static_cast<double>(n);
    if (same_size(size, base)) out.push_back("ClqN");
    if (same_size(size, 2 * base)) out.push_back("2ClqN");
  }
  if (p.c && !p.q_levels.empty()) {
    double sum = 0;
    for (double x : p.q_levels) sum += x;
    if (same_size(size, *p.c * sum * static_cast<double>(n))) out.push_back("CsumqN");
  }
  return out;
}

// Regime a bound source belongs to; empty for the single-set lemmas.
std::string regime_of(const std::string& source) {
  if (source.rfind("fragmentation_", 0) == 0) return "2ClqN";
  if (source == "nonuniform_conditional") return "ClqN";
  if (source == "multilevel_conditional") return "CsumqN";
  return {};
}

std::string column_name(const BoundValue& b) {
  return b.index ? b.source + "_" + std::to_string(b.index) : b.source;
}

int cmd_threshold(const ThresholdArgs& a, Context& ctx) {
  if (a.format != "csv" && a.format != "json") throw InputError("--format must be csv or json");
  const Hypergraph h = read_hypergraph(a.input);
  const std::size_t n = h.num_vertices();
  if (n == 0) throw InputError("threshold needs at least one vertex");
  BoundParams base = bound_params_from(a.bounds);
  base.n = n;
  if (!h.empty()) base.r = uniformity(h).max_size;

  const auto estimates = threshold_scan(h, a.sizes, a.trials, a.seed, a.confidence);

  struct Row {
    ThresholdEstimate e;
    std::optional<ExactContainment> exact;
    std::string exact_note;
    std::vector<std::string> regime;
    BoundSet bounds;
  };
  std::vector<Row> rows;
  for (const auto& e : estimates) {
    Row row{e, std::nullopt, {}, regimes(e.set_size, n, base), {}};
    if (a.exact) {
      try {
        row.exact = exact_containment(h, e.set_size, ctx.budgets.enumeration);
      } catch (const ResourceError& err) {
        row.exact_note = err.what();
      }
    }
    BoundParams p = base;
    p.alpha = static_cast<double>(e.set_size) / static_cast<double>(n);
    row.bounds = evaluate_bounds(p);
    rows.push_back(std::move(row));
  }
  auto in_regime = [](const Row& row, const BoundValue& b) {
    const std::string r = regime_of(b.source);
    return r.empty() || std::find(row.regime.begin(), row.regime.end(), r) != row.regime.end();
  };

  std::string text;
  if (a.format == "csv") {
    text = std::string("# spreadlab ") + kVersion + "\n# config: " + ctx.config.dump() + "\n";
    text += "size,trials,successes,p_hat,lo,hi";
    if (a.exact) text += ",exact,exact_method";
    text += ",regime";
    if (!rows.empty()) {
      for (const auto& b : rows.front().bounds.values) text += "," + column_name(b);
    }
    text += "\n";
    for (const auto& row : rows) {
      const auto& e = row.e;
      text += std::to_string(e.set_size) + "," + std::to_string(e.trials) + "," + std::to_string(e.successes) + "," +
              format_double(e.p_hat) + "," + format_double(e.lo) + "," + format_double(e.hi);
      if (a.exact) {
        text += row.exact ? "," + to_string(row.exact->probability) + "," + to_string(row.exact->method) : ",NA,NA";
      }
      std::string regime;
      for (const auto& r : row.regime) regime += (regime.empty() ? "" : "|") + r;
      text += "," + (regime.empty() ? std::string("none") : regime);
      for (const auto& b : row.bounds.values) {
        text += "," + (b.applicable && in_regime(row, b) ? format_double(b.value) : std::string("NA"));
      }
      text += "\n";
    }
  } else {
    json jr = json::array();
    for (const auto& row : rows) {
      json j = to_json(row.e);
      if (a.exact) {
        if (row.exact) {
          j["exact"] = to_json(row.exact->probability);
          j["exact_method"] = to_string(row.exact->method);
        } else {
          j["exact"] = nullptr;
          j["exact_note"] = row.exact_note;
        }
      }
      j["regime"] = row.regime;
      json bs = json::array();
      for (const auto& b : row.bounds.values) {
        json jb = to_json(b);
        jb["in_regime"] = in_regime(row, b);
        bs.push_back(jb);
      }
      j["bounds"] = bs;
      jr.push_back(j);
    }
    text = dump(json{{"config", ctx.config}, {"rows", jr}});
  }
  emit(a.output, text, ctx.out);
  return kOk;
}

struct BoundsArgs {
  std::optional<double> c, q, alpha, k0;
  std::optional<unsigned> l, r;
  std::optional<std::size_t> n;
  std::vector<unsigned> r_seq;
  std::vector<double> q_list;
  std::string output;
};

int cmd_bounds(const BoundsArgs& a, Context& ctx) {
  BoundParams p;
  p.c = a.c;
  p.q = a.q;
  p.alpha = a.alpha;
  p.k0 = a.k0;
  p.levels = a.l;
  p.r = a.r;
  p.n = a.n;
  p.r_sequence = a.r_seq;
  p.q_levels = a.q_list;
  json j = to_json(evaluate_bounds(p));
  j["config"] = ctx.config;
  emit(a.output, dump(j), ctx.out);
  return kOk;
}

// ---- suite ----

struct SuiteArgs {
  std::string profile = "quick";
  std::string output;
};

int cmd_suite(const SuiteArgs& a, Context& ctx) {
  const auto profile = acceptance::parse_profile(a.profile);
  const auto report = acceptance::run(profile, [&](const acceptance::CriterionResult& r) {
    ctx.err << acceptance::format_line(r) << "\n";
  });
  json j = acceptance::to_json(report);
  j["config"] = ctx.config;
  emit(a.output, dump(j), ctx.out);
  return report.all_passed() ? kOk : kVerdictFail;
}

}  // namespace

Budgets budgets_from_environment() {
  Budgets b{kDefaultCandidateBudget, kDefaultExactBudget, kDefaultEnumerationBudget};
  if (const char* v = std::getenv("SPREADLAB_BUDGET_CANDIDATES")) b.candidates = parse_u64(v, "SPREADLAB_BUDGET_CANDIDATES");
  if (const char* v = std::getenv("SPREADLAB_BUDGET_ENUM")) b.enumeration = parse_u64(v, "SPREADLAB_BUDGET_ENUM");
  if (const char* v = std::getenv("SPREADLAB_BUDGET_PAIRS")) b.pairs = parse_u64(v, "SPREADLAB_BUDGET_PAIRS");
  return b;
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::string last;
  for (const auto& token : split(text, ',')) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      if (last.empty()) throw InputError("'" + token + "' is not key=value");
      kv[last] += "," + token;
      continue;
    }
    last = token.substr(0, eq);
    if (last.empty()) throw InputError("empty key in '" + text + "'");
    if (kv.count(last)) throw InputError("duplicate key '" + last + "'");
    kv[last] = token.substr(eq + 1);
  }
  return kv;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spread hypergraph certification and threshold experiments", "spreadlab"};
  app.set_version_flag("--version", std::string("spreadlab ") + kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  int jobs_flag = 0;
  std::uint64_t budget_candidates = 0, budget_enum = 0, budget_pairs = 0;
  app.add_option("--jobs", jobs_flag, "Worker threads (default: available processors)")->check(CLI::NonNegativeNumber);
  auto* opt_bc = app.add_option("--budget-candidates", budget_candidates, "Max candidate sets for exact certification");
  auto* opt_be = app.add_option("--budget-enum", budget_enum, "Max subsets enumerated by exact oracles");
  auto* opt_bp = app.add_option("--budget-pairs", budget_pairs, "Max (S, W) checks for bad-pair counting");

  GenerateArgs gen;
  auto* sub_gen = app.add_subcommand("generate", "Write a hypergraph in the interchange format");
  sub_gen->add_option("--family", gen.family)
      ->required()
      ->check(CLI::IsMember({"complete", "matchings", "hamilton", "hamilton-sq", "copies", "random"}));
  sub_gen->add_option("--n", gen.n, "Vertices (edges of K_n for graph families)")->required();
  sub_gen->add_option("--r", gen.r);
  sub_gen->add_option("--m", gen.m);
  sub_gen->add_option("--seed", gen.seed)->capture_default_str();
  sub_gen->add_option("--f", gen.f, "Pattern graph for copies");
  sub_gen->add_option("--name", gen.name);
  sub_gen->add_option("--output", gen.output);

  CertifyArgs cert;
  auto* sub_cert = app.add_subcommand("certify", "Certify q-spread, tiered or multi-level spread");
  sub_cert->add_option("--mode", cert.mode)->check(CLI::IsMember({"q", "tiered", "multilevel"}))->capture_default_str();
  sub_cert->add_option("--q", cert.q, "Rational a/b");
  sub_cert->add_option("--q-list", cert.q_list, "Per-level rationals")->delimiter(',');
  sub_cert->add_option("--r-seq", cert.r_seq)->delimiter(',');
  sub_cert->add_option("--input", cert.input)->required();
  sub_cert->add_flag("--exact", cert.exact, "Exact certification (default)");
  sub_cert->add_option("--samples", cert.samples, "Sampled certification with N draws");
  sub_cert->add_option("--seed", cert.seed)->capture_default_str();
  sub_cert->add_option("--output", cert.output);

  MinSpreadArgs ms;
  auto* sub_ms = app.add_subcommand("min-spread", "Smallest q for which the input is spread");
  sub_ms->add_option("--input", ms.input)->required();
  sub_ms->add_option("--r-seq", ms.r_seq, "Tiered sequence (omit for plain q-spread)")->delimiter(',');
  sub_ms->add_option("--output", ms.output);

  FragmentArgs frag;
  auto* sub_frag = app.add_subcommand("fragment", "Run the fragmentation process");
  sub_frag->add_option("--input", frag.input)->required();
  sub_frag->add_option("--r-seq", frag.r_seq)->delimiter(',')->required();
  sub_frag->add_option("--q", frag.q)->required();
  sub_frag->add_option("--C", frag.c)->required();
  sub_frag->add_option("--seed", frag.seed)->capture_default_str();
  sub_frag->add_option("--trials", frag.trials)->capture_default_str();
  sub_frag->add_flag("--check", frag.check, "Verify trace invariants and spread preservation");
  sub_frag->add_option("--output", frag.output);

  BadPairsArgs bp;
  auto* sub_bp = app.add_subcommand("badpairs", "Count k-bad pairs exhaustively");
  sub_bp->add_option("--input", bp.input)->required();
  sub_bp->add_option("--k", bp.k)->required();
  sub_bp->add_option("--C", bp.c)->capture_default_str();
  sub_bp->add_option("--q", bp.q)->required();
  sub_bp->add_option("--pn", bp.pn)->required();
  sub_bp->add_flag("--allow-unmet-hypotheses", bp.allow_unmet, "Count even when the numeric hypotheses fail");
  sub_bp->add_option("--output", bp.output);

  ExpectationArgs ex;
  auto* sub_ex = app.add_subcommand("expectation", "Expected number of edges meeting S in W' in at least k vertices");
  sub_ex->add_option("--input", ex.input)->required();
  sub_ex->add_option("--edge", ex.edge, "Index of S among the edges");
  sub_ex->add_option("--set", ex.set, "S as labels")->delimiter(',');
  sub_ex->add_option("--w", ex.w)->required();
  sub_ex->add_option("--k", ex.k)->required();
  sub_ex->add_flag("--oracle", ex.oracle, "Also enumerate W' directly");
  sub_ex->add_option("--output", ex.output);

  ThresholdArgs th;
  auto* sub_th = app.add_subcommand("threshold", "Monte Carlo containment probabilities");
  sub_th->add_option("--input", th.input)->required();
  sub_th->add_option("--sizes", th.sizes)->delimiter(',')->required();
  sub_th->add_option("--trials", th.trials)->capture_default_str();
  sub_th->add_option("--seed", th.seed)->capture_default_str();
  sub_th->add_flag("--exact", th.exact, "Add exact containment probabilities");
  sub_th->add_option("--bounds", th.bounds, "C=..,l=..,q=..,rseq=..,K0=..,qs=..");
  sub_th->add_option("--confidence", th.confidence)->capture_default_str()->check(CLI::Range(0.0, 1.0));
  sub_th->add_option("--format", th.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sub_th->add_option("--output", th.output);

  BoundsArgs bd;
  auto* sub_bd = app.add_subcommand("bounds", "Evaluate the closed-form containment bounds");
  sub_bd->add_option("--C", bd.c);
  sub_bd->add_option("--l", bd.l);
  sub_bd->add_option("--q", bd.q);
  sub_bd->add_option("--rseq", bd.r_seq)->delimiter(',');
  sub_bd->add_option("--alpha", bd.alpha);
  sub_bd->add_option("--r", bd.r);
  sub_bd->add_option("--n", bd.n);
  sub_bd->add_option("--K0", bd.k0);
  sub_bd->add_option("--q-list", bd.q_list)->delimiter(',');
  sub_bd->add_option("--output", bd.output);

  SuiteArgs su;
  auto* sub_su = app.add_subcommand("suite", "Run the acceptance criteria");
  sub_su->add_option("--profile", su.profile)->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
  sub_su->add_option("--output", su.output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n\n";
    const auto parsed = app.get_subcommands();
    err << (parsed.empty() ? app.help() : parsed.front()->help());
    return kInputError;
  }

  try {
    Budgets budgets = budgets_from_environment();
    if (opt_bc->count()) budgets.candidates = budget_candidates;
    if (opt_be->count()) budgets.enumeration = budget_enum;
    if (opt_bp->count()) budgets.pairs = budget_pairs;
    set_jobs(jobs_flag > 0 ? jobs_flag : available_processors());

    const CLI::App* sub = app.get_subcommands().front();
    json config{{"command", sub->get_name()},
                {"options", options_of(*sub)},
                {"version", kVersion},
                {"jobs", jobs()},
                {"budgets", {{"candidates", budgets.candidates}, {"enumeration", budgets.enumeration}, {"pairs", budgets.pairs}}}};
    Context ctx{budgets, config, out, err};

    if (sub == sub_gen) return cmd_generate(gen, ctx);
    if (sub == sub_cert) return cmd_certify(cert, ctx);
    if (sub == sub_ms) return cmd_min_spread(ms, ctx);
    if (sub == sub_frag) return cmd_fragment(frag, ctx);
    if (sub == sub_bp) return cmd_badpairs(bp, ctx);
    if (sub == sub_ex) return cmd_expectation(ex, ctx);
    if (sub == sub_th) return cmd_threshold(th, ctx);
    if (sub == sub_bd) return cmd_bounds(bd, ctx);
    return cmd_suite(su, ctx);
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return kResourceError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace spreadlab::cli
