#include "fsl/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "fsl/acceptance.hpp"
#include "fsl/bounds.hpp"
#include "fsl/fermat.hpp"
#include "fsl/grouprep.hpp"
#include "fsl/molien.hpp"
#include "fsl/report.hpp"
#include "fsl/spin_group.hpp"
#include "fsl/toric.hpp"
#include "fsl/wci.hpp"

namespace fsl::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char kUsage[] =
    "usage: fsl <command> <subcommand> [flags] [--json]\n"
    "\n"
    "  reps min-degree --family <sym|alt|schur-sym|double-alt|triple-alt|six-alt> --k <k>\n"
    "  reps spectrum   --k <k> --bound <b>\n"
    "  molien spin-a   --k <k> --cap <d>\n"
    "  molien oracle   --group <sym-std|sym-nat> --k <k> --cap <d>\n"
    "  wci bound       --dim <n> [--cy]\n"
    "  wci search      --dim <n> [--cy]\n"
    "  wci example     --dim <n>\n"
    "  wci check       --weights a,b,... --degrees d,...\n"
    "  fermat verdict  --ambient <N> --degrees d,... [--tol <t>]\n"
    "  fermat suite\n"
    "  toric classgroup --rays <file>\n"
    "  toric lemma42    --rays <file>\n"
    "  bounds jordan   --dim <n>\n"
    "  bounds sylow    --k <k> --p <p>\n"
    "  suite acceptance\n";

struct Flags {
  std::map<std::string, std::string> values;
  std::set<std::string> switches;
  bool json = false;

  const std::string& require(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end()) throw UsageError("missing flag --" + name);
    return it->second;
  }
  std::optional<std::string> get(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end()) return std::nullopt;
    return it->second;
  }
  bool has_switch(const std::string& name) const {
    return switches.count(name) > 0;
  }
};

long parse_long(const std::string& s, const std::string& what) {
  char* end = nullptr;
  errno = 0;
  long v = std::strtol(s.c_str(), &end, 10);
  if (errno != 0 || end == s.c_str() || *end != '\0')
    throw UsageError("bad integer for " + what + ": '" + s + "'");
  return v;
}

double parse_double(const std::string& s, const std::string& what) {
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(s.c_str(), &end);
  if (errno != 0 || end == s.c_str() || *end != '\0')
    throw UsageError("bad number for " + what + ": '" + s + "'");
  return v;
}

std::vector<long> parse_long_list(const std::string& s, const std::string& what) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_long(tok, what));
  if (out.empty()) throw UsageError("empty list for " + what);
  return out;
}

Flags parse_flags(const std::vector<std::string>& args, size_t start,
                  const std::set<std::string>& value_flags,
                  const std::set<std::string>& switch_flags) {
  Flags f;
  for (size_t i = start; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--json") {
      f.json = true;
      continue;
    }
    if (a.rfind("--", 0) != 0) throw UsageError("unexpected argument '" + a + "'");
    std::string name = a.substr(2);
    if (switch_flags.count(name)) {
      f.switches.insert(name);
      continue;
    }
    if (!value_flags.count(name)) throw UsageError("unknown flag --" + name);
    if (i + 1 >= args.size()) throw UsageError("flag --" + name + " needs a value");
    f.values[name] = args[++i];
  }
  return f;
}

std::string join_longs(const std::vector<long>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

grouprep::Family parse_family(const std::string& s) {
  using grouprep::Family;
  if (s == "sym") return Family::Sym;
  if (s == "alt") return Family::Alt;
  if (s == "schur-sym") return Family::SchurSym;
  if (s == "double-alt") return Family::DoubleAlt;
  if (s == "triple-alt") return Family::TripleAlt;
  if (s == "six-alt") return Family::SixAlt;
  throw UsageError("unknown family '" + s + "'");
}

// Frozen minimal-degree table for the claim checks, 4 <= k <= 12.
std::optional<long> table_degree(grouprep::Family f, int k) {
  using grouprep::Family;
  if (k < 4 || k > 12) return std::nullopt;
  switch (f) {
    case Family::Sym: return k == 4 ? 3 : k == 5 ? 4 : k == 6 ? 5 : k - 1;
    case Family::SchurSym:
      return k == 4 ? 2 : (k == 5 || k == 6) ? 4 : 1L << ((k - 1) / 2);
    case Family::Alt:
      return (k == 4 || k == 5) ? 3 : k == 6 ? 5 : k == 7 ? 6 : k - 1;
    case Family::DoubleAlt:
      return (k == 4 || k == 5) ? 2 : (k == 6 || k == 7) ? 4
                                                         : 1L << ((k - 2) / 2);
    case Family::TripleAlt:
      if (k == 6) return 3;
      if (k == 7) return 6;
      return std::nullopt;
    case Family::SixAlt:
      if (k == 6 || k == 7) return 6;
      return std::nullopt;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// handlers
// ---------------------------------------------------------------------------

Report reps_min_degree(const Flags& f) {
  Report rep;
  rep.command = "reps min-degree";
  const std::string fam_str = f.require("family");
  const int k = static_cast<int>(parse_long(f.require("k"), "--k"));
  rep.input("family", fam_str);
  rep.input("k", std::to_string(k));
  grouprep::Family fam = parse_family(fam_str);
  Int deg = grouprep::min_faithful_degree({fam, k});
  rep.result("min_faithful_degree", deg.get_str());
  if (auto want = table_degree(fam, k))
    rep.claim("min-degree-table-" + fam_str + "-" + std::to_string(k),
              deg == *want);
  return rep;
}

Report reps_spectrum(const Flags& f) {
  Report rep;
  rep.command = "reps spectrum";
  const int k = static_cast<int>(parse_long(f.require("k"), "--k"));
  const long bound = parse_long(f.require("bound"), "--bound");
  rep.input("k", std::to_string(k));
  rep.input("bound", std::to_string(bound));
  grouprep::DegreeSpectrum s = grouprep::sym_degree_spectrum(k, Int(bound));
  std::string entries;
  for (const auto& [d, m] : s.entries) {
    if (!entries.empty()) entries += " ";
    entries += d.get_str() + ":" + std::to_string(m);
  }
  rep.result("spectrum", entries);
  if (k >= 9 && k <= 12 && bound >= k * (k - 3) / 2) {
    bool ok = s.entries.size() >= 3 && s.entries[0].first == 1 &&
              s.entries[1].first == k - 1 &&
              s.entries[2].first == Int(k) * (k - 3) / 2;
    rep.claim("three-smallest-dimensions-k" + std::to_string(k), ok);
  }
  if (k == 8 && bound >= 14) {
    bool ok = s.entries.size() >= 3 && s.entries[2].first == 14;
    rep.claim("third-dimension-14-k8", ok);
  }
  return rep;
}

Report molien_spin(const Flags& f) {
  Report rep;
  rep.command = "molien spin-a";
  const int k = static_cast<int>(parse_long(f.require("k"), "--k"));
  const int cap = static_cast<int>(parse_long(f.get("cap").value_or("12"), "--cap"));
  rep.input("k", std::to_string(k));
  rep.input("cap", std::to_string(cap));
  auto gens = spinmolien::clifford_even_generators(k);
  rep.result("model_dimension", std::to_string(gens.front().dim()));
  spinmolien::FiniteMatrixGroup g = spinmolien::close_group(gens, 1u << 20);
  rep.result("group_order", std::to_string(g.order()));
  Int want_order = factorial(static_cast<unsigned>(k));
  rep.claim("double-cover-order-k" + std::to_string(k),
            Int(static_cast<unsigned long>(g.order())) == want_order);
  spinmolien::TruncatedSeries s = spinmolien::molien_series(g, cap);
  std::string coeffs;
  for (const auto& c : s.coeffs) {
    if (!coeffs.empty()) coeffs += ",";
    coeffs += c.get_str();
  }
  rep.result("molien_coefficients", coeffs);
  spinmolien::GeneratorDegrees gd = spinmolien::generator_degrees(s, cap);
  std::string degs;
  for (const auto& [d, c] : gd.degrees) {
    if (!degs.empty()) degs += " ";
    degs += "(" + std::to_string(d) + "," + std::to_string(c) + ")";
  }
  rep.result("generator_degrees", degs);
  rep.result("reliable_up_to", std::to_string(gd.reliable_up_to));
  if (k == 8 && cap >= 8) {
    const long expected[] = {1, 0, 1, 0, 1, 0, 1, 0, 4};
    bool ok = true;
    for (int d = 0; d <= 8; ++d)
      if (s.at(d) != expected[d]) ok = false;
    rep.claim("spin-a8-invariant-dimensions", ok);
    // the three lowest generator degrees are 2, 8, 8
    bool gd_ok = gd.degrees.size() >= 2 && gd.degrees[0] == std::make_pair(2, 1) &&
                 gd.degrees[1].first == 8 && gd.degrees[1].second >= 2;
    rep.claim("spin-a8-generator-degrees-2-8-8", gd_ok);
  }
  return rep;
}

Report molien_oracle(const Flags& f) {
  Report rep;
  rep.command = "molien oracle";
  const std::string group = f.require("group");
  const int k = static_cast<int>(parse_long(f.require("k"), "--k"));
  const int cap = static_cast<int>(parse_long(f.get("cap").value_or("12"), "--cap"));
  rep.input("group", group);
  rep.input("k", std::to_string(k));
  rep.input("cap", std::to_string(cap));
  if (k < 2 || k > 7) throw UsageError("--k out of range for oracle (2..7)");

  std::vector<int> p(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) p[static_cast<size_t>(i)] = i;
  std::vector<spinmolien::ExactMatrix> els;
  const bool natural = group == "sym-nat";
  if (!natural && group != "sym-std") throw UsageError("--group must be sym-std or sym-nat");
  do {
    els.push_back(spinmolien::permutation_rep(
        p, natural ? spinmolien::PermRepMode::Natural
                   : spinmolien::PermRepMode::Standard));
  } while (std::next_permutation(p.begin(), p.end()));
  spinmolien::FiniteMatrixGroup g;
  g.dim = natural ? k : k - 1;
  g.elements = std::move(els);
  spinmolien::TruncatedSeries s = spinmolien::molien_series(g, cap);
  std::string coeffs;
  for (const auto& c : s.coeffs) {
    if (!coeffs.empty()) coeffs += ",";
    coeffs += c.get_str();
  }
  rep.result("molien_coefficients", coeffs);

  if (natural) {
    // partition generating function with parts <= k
    std::vector<long> dp(static_cast<size_t>(cap) + 1, 0);
    dp[0] = 1;
    for (int part = 1; part <= k; ++part)
      for (int m = part; m <= cap; ++m) dp[static_cast<size_t>(m)] += dp[static_cast<size_t>(m - part)];
    bool ok = true;
    for (int d = 0; d <= cap; ++d)
      if (s.at(d) != dp[static_cast<size_t>(d)]) ok = false;
    rep.claim("molien-natural-partition-oracle-k" + std::to_string(k), ok);
  } else if (k == 4) {
    spinmolien::TruncatedSeries free =
        spinmolien::free_algebra_series({{2, 1}, {3, 1}, {4, 1}}, cap);
    bool ok = true;
    for (int d = 0; d <= cap; ++d)
      if (s.at(d) != free.at(d)) ok = false;
    rep.claim("molien-sym4-standard-free-234", ok);
  }
  return rep;
}

Report wci_bound(const Flags& f) {
  Report rep;
  rep.command = "wci bound";
  const long n = parse_long(f.require("dim"), "--dim");
  const bool cy = f.has_switch("cy");
  rep.input("dim", std::to_string(n));
  rep.input("kind", cy ? "calabi-yau" : "fano");
  const int bound = cy ? wci::c_cy(n) : wci::c_fano(n);
  rep.result(cy ? "c_cy" : "c_fano", std::to_string(bound));
  const int scanned = wci::max_k_degree_condition(n, !cy);
  rep.result("degree_condition_scan", std::to_string(scanned));
  rep.claim("bound-formula-scan-agreement", scanned == bound);
  static const int fano_table[] = {4, 5, 7, 8, 9};
  static const int cy_table[] = {4, 6, 7, 8, 10};
  if (n >= 1 && n <= 5)
    rep.claim("bound-table-n" + std::to_string(n),
              bound == (cy ? cy_table[n - 1] : fano_table[n - 1]));
  return rep;
}

Report wci_search(const Flags& f) {
  Report rep;
  rep.command = "wci search";
  const long n = parse_long(f.require("dim"), "--dim");
  const bool cy = f.has_switch("cy");
  rep.input("dim", std::to_string(n));
  rep.input("kind", cy ? "calabi-yau" : "fano");
  wci::SearchOutcome out = wci::search_max_symmetric(
      static_cast<int>(n), cy ? wci::Kind::CalabiYau : wci::Kind::Fano);
  rep.certification = out.upper_bound_only ? Certification::UpperBoundOnly
                                           : Certification::Exact;
  rep.result("max_feasible_k", std::to_string(out.max_feasible_k));
  rep.result("witness_count", std::to_string(out.witnesses.size()));
  rep.result("degree_cap", std::to_string(out.degree_cap));
  std::string shapes;
  for (const auto& a : out.ambient_shapes) {
    if (!shapes.empty()) shapes += " ";
    shapes += a;
  }
  rep.result("ambient_shapes", shapes);
  for (size_t i = 0; i < out.witnesses.size() && i < 8; ++i) {
    const auto& w = out.witnesses[i];
    rep.result("witness_" + std::to_string(i),
               w.ambient + " degrees " + join_longs(w.degrees));
  }
  const int bound = cy ? wci::c_cy(n) : wci::c_fano(n);
  rep.claim("search-matches-bound", out.max_feasible_k == bound);
  if (!cy) {
    bool shapes_ok = true;
    for (const auto& w : out.witnesses) {
      bool plain = w.shape.extra_weights.empty();
      bool one_extra = w.shape.extra_weights.size() == 1 && w.shape.b == 1;
      if (!plain && !one_extra) shapes_ok = false;
    }
    rep.claim("ambient-shapes-restricted", shapes_ok);
  }
  return rep;
}

Report wci_example(const Flags& f) {
  Report rep;
  rep.command = "wci example";
  const long n = parse_long(f.require("dim"), "--dim");
  rep.input("dim", std::to_string(n));
  auto [cand, shape] = wci::maximal_example(static_cast<int>(n));
  rep.result("ambient", "P^" + std::to_string(cand.ambient_dim()));
  rep.result("degrees", join_longs(cand.degrees));
  rep.result("k", std::to_string(shape.k));
  rep.result("canonical_degree", std::to_string(wci::canonical_degree(cand)));
  rep.claim("example-is-fano", wci::classify(cand) == wci::VarietyClass::Fano);
  long idx = wci::fano_index(cand);
  rep.result("fano_index", std::to_string(idx));
  rep.claim("example-index-meets-bound",
            idx == wci::index_upper_bound(static_cast<int>(n),
                                          wci::c_fano(n)));
  return rep;
}

Report wci_check(const Flags& f) {
  Report rep;
  rep.command = "wci check";
  wci::WciCandidate cand;
  cand.weights = parse_long_list(f.require("weights"), "--weights");
  cand.degrees = parse_long_list(f.require("degrees"), "--degrees");
  std::sort(cand.weights.begin(), cand.weights.end());
  std::sort(cand.degrees.begin(), cand.degrees.end());
  rep.input("weights", join_longs(cand.weights));
  rep.input("degrees", join_longs(cand.degrees));
  if (!cand.valid()) throw UsageError("invalid weight/degree data");
  rep.result("dimension", std::to_string(cand.dim()));
  rep.result("well_formed", wci::well_formed_space(cand.weights) ? "true" : "false");
  rep.result("linear_cone_free", wci::linear_cone_free(cand) ? "true" : "false");
  long kd = wci::canonical_degree(cand);
  rep.result("canonical_degree", std::to_string(kd));
  const char* cls = kd < 0 ? "fano" : kd == 0 ? "calabi-yau" : "general-type";
  rep.result("class", cls);
  if (kd < 0) rep.result("fano_index", std::to_string(-kd));
  wci::IfReport ifr = wci::if_inequalities(cand);
  rep.result("degree_weight_inequalities_part1", ifr.part1 ? "true" : "false");
  rep.result("degree_weight_inequalities_part2",
             ifr.part2 ? (*ifr.part2 ? "true" : "false") : "n/a");
  return rep;
}

std::optional<bool> named_fermat_row(int ambient, const std::vector<long>& d) {
  // smooth = true rows of the sharpness analysis
  if (ambient == 7 && d == std::vector<long>{1, 2, 3}) return true;
  if (ambient == 6 && d == std::vector<long>{1, 2, 4}) return true;
  if (ambient == 7 && d == std::vector<long>{1, 3, 4}) return true;
  if (ambient == 8 && d == std::vector<long>{1, 3, 4}) return true;
  if (ambient == 7 && d == std::vector<long>{1, 2, 5}) return false;
  if (ambient == 8 && d == std::vector<long>{1, 2, 5}) return false;
  return std::nullopt;
}

void fermat_verdict_into(Report& rep, const fermat::FermatCI& ci,
                         const fermat::SearchOptions& opt,
                         const std::string& prefix) {
  fermat::SmoothnessVerdict v = fermat::singular_point_search(ci, opt);
  rep.result(prefix + "status", fermat::verdict_name(v.status));
  rep.result(prefix + "certification",
             v.certification == fermat::CertKind::Exact
                 ? "exact"
                 : "numeric-residual(" + std::to_string(v.tolerance) + ")");
  if (v.certification != fermat::CertKind::Exact)
    rep.certification = Certification::Numeric;
  if (v.witness) {
    std::string vals;
    for (const auto& z : v.witness->values) {
      if (!vals.empty()) vals += " ";
      std::ostringstream os;
      os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
      vals += os.str();
    }
    rep.result(prefix + "witness_values", vals);
    std::string mults;
    for (int m : v.witness->multiplicities) {
      if (!mults.empty()) mults += ",";
      mults += std::to_string(m);
    }
    rep.result(prefix + "witness_multiplicities", mults);
    rep.result(prefix + "witness_zero_multiplicity",
               std::to_string(v.witness->zero_multiplicity));
    std::ostringstream os;
    os << v.witness_residual;
    rep.result(prefix + "witness_residual", os.str());
  }
  if (auto smooth = named_fermat_row(ci.ambient, ci.degrees)) {
    std::string id = "fermat-" + std::to_string(ci.ambient) + "-" +
                     join_longs(ci.degrees);
    bool is_singular = v.status == fermat::VerdictStatus::SingularWitness;
    rep.claim(id, *smooth ? !is_singular : is_singular);
  }
}

Report fermat_verdict(const Flags& f) {
  Report rep;
  rep.command = "fermat verdict";
  fermat::FermatCI ci;
  ci.ambient = static_cast<int>(parse_long(f.require("ambient"), "--ambient"));
  ci.degrees = parse_long_list(f.require("degrees"), "--degrees");
  std::sort(ci.degrees.begin(), ci.degrees.end());
  fermat::SearchOptions opt;
  if (auto t = f.get("tol")) opt.residual_tol = parse_double(*t, "--tol");
  rep.input("ambient", std::to_string(ci.ambient));
  rep.input("degrees", join_longs(ci.degrees));
  rep.input("tol", std::to_string(opt.residual_tol));
  if (!ci.valid()) throw UsageError("invalid Fermat data");
  fermat_verdict_into(rep, ci, opt, "");
  return rep;
}

Report fermat_suite(const Flags& f) {
  Report rep;
  rep.command = "fermat suite";
  fermat::SearchOptions opt;
  if (auto t = f.get("tol")) opt.residual_tol = parse_double(*t, "--tol");
  rep.input("tol", std::to_string(opt.residual_tol));
  std::vector<fermat::VerdictRow> rows = fermat::verdict_suite(opt);
  for (const auto& row : rows) {
    std::string prefix =
        "P" + std::to_string(row.ambient) + "_" + join_longs(row.degrees) + ".";
    rep.result(prefix + "status", fermat::verdict_name(row.verdict.status));
    if (auto smooth = named_fermat_row(row.ambient, row.degrees)) {
      std::string id = "fermat-" + std::to_string(row.ambient) + "-" +
                       join_longs(row.degrees);
      bool is_singular =
          row.verdict.status == fermat::VerdictStatus::SingularWitness;
      rep.claim(id, *smooth ? !is_singular : is_singular);
      if (is_singular) rep.claim(id + "-residual", row.verdict.witness_residual < 1e-9);
    }
    if (row.verdict.certification != fermat::CertKind::Exact)
      rep.certification = Certification::Numeric;
  }
  return rep;
}

Report toric_classgroup(const Flags& f) {
  Report rep;
  rep.command = "toric classgroup";
  const std::string path = f.require("rays");
  rep.input("rays", path);
  toric::FanData fan = toric::load_ray_file(path);
  if (auto err = fan.validate()) throw UsageError("invalid fan: " + *err);
  rep.result("rank", std::to_string(fan.rank));
  rep.result("ray_count", std::to_string(fan.ray_count()));
  toric::ClassGroupDescriptor cg = toric::class_group(fan);
  rep.result("free_rank", std::to_string(cg.free_rank));
  std::string tors;
  for (const auto& t : cg.torsion) {
    if (!tors.empty()) tors += ",";
    tors += t.get_str();
  }
  rep.result("torsion", tors.empty() ? "none" : tors);
  rep.claim("class-group-rank-d-minus-n",
            cg.free_rank == fan.ray_count() - fan.rank);
  return rep;
}

Report toric_lemma42(const Flags& f) {
  Report rep;
  rep.command = "toric lemma42";
  const std::string path = f.require("rays");
  rep.input("rays", path);
  toric::FanData fan = toric::load_ray_file(path);
  if (auto err = fan.validate()) throw UsageError("invalid fan: " + *err);
  toric::RayPartition part = toric::ray_partition(fan);
  std::string sizes;
  for (int s : part.sizes) {
    if (!sizes.empty()) sizes += ",";
    sizes += std::to_string(s);
  }
  rep.result("block_sizes", sizes);
  toric::PartitionBoundReport l = toric::partition_bound_check(fan);
  rep.result("sum_ok", l.sum_ok ? "true" : "false");
  rep.result("equality", l.equality ? "true" : "false");
  if (l.product_decomposition) {
    std::string dec;
    for (int s : *l.product_decomposition) {
      if (!dec.empty()) dec += ",";
      dec += std::to_string(s);
    }
    rep.result("product_decomposition", dec);
  }
  rep.claim("ray-partition-size-bound", l.sum_ok);
  return rep;
}

Report bounds_jordan(const Flags& f) {
  Report rep;
  rep.command = "bounds jordan";
  const long n = parse_long(f.require("dim"), "--dim");
  rep.input("dim", std::to_string(n));
  rep.certification = Certification::UpperBoundOnly;
  Int p = bounds::smallest_prime_above(Int(n) + 1);
  Int bound = bounds::jordan_quadratic_bound(n);
  rep.result("smallest_prime_above_n_plus_1", p.get_str());
  rep.result("upper_bound", bound.get_str());
  Rat ratio = bounds::asymptotic_ratio(n);
  rep.result("ratio_to_square", ratio.get_str());
  // the case split behind the bound, verified mechanically at this n
  bool trigger_ok = true;
  long pl = to_long(p);
  for (long k = pl * (n + 1); k <= pl * (n + 1) + pl; ++k) {
    bounds::SylowShape sh = bounds::sylow_structure(k, p);
    bool deep = false;
    long w1 = 0;
    for (const auto& fac : sh.factors) {
      if (fac.i >= 2 && fac.count > 0) deep = true;
      if (fac.i == 1) w1 = fac.count;
    }
    if (!(deep || w1 >= n + 1)) trigger_ok = false;
  }
  rep.claim("sylow-trigger-at-bound", trigger_ok);
  if (n == 4) rep.claim("jordan-bound-dim4-34", bound == 34);
  return rep;
}

Report bounds_sylow(const Flags& f) {
  Report rep;
  rep.command = "bounds sylow";
  const long k = parse_long(f.require("k"), "--k");
  const long p = parse_long(f.require("p"), "--p");
  rep.input("k", std::to_string(k));
  rep.input("p", std::to_string(p));
  bounds::SylowShape sh = bounds::sylow_structure(k, Int(p));
  std::string factors;
  for (const auto& fac : sh.factors) {
    if (!factors.empty()) factors += " ";
    factors += "W(" + std::to_string(fac.i) + ")^" + std::to_string(fac.count) +
               (fac.nonabelian ? "[nonabelian]" : "[abelian]");
  }
  rep.result("factors", factors.empty() ? "trivial" : factors);
  rep.result("p_adic_valuation", sh.p_adic_valuation().get_str());
  rep.claim("legendre-order-consistency",
            sh.p_adic_valuation() == bounds::legendre_valuation(k, Int(p)));
  return rep;
}

Report suite_acceptance(std::ostream& out) {
  Report rep;
  rep.command = "suite acceptance";
  std::vector<acceptance::CriterionResult> rs = acceptance::run_all(out);
  for (const auto& r : rs) {
    rep.claim("criterion-" + std::to_string(r.number), r.pass);
    std::ostringstream os;
    os << (r.pass ? "pass" : "FAIL") << " in " << r.seconds << " s";
    rep.result("criterion_" + std::to_string(r.number), os.str());
  }
  return rep;
}

void validate_threads_env() {
  const char* env = std::getenv("FSL_THREADS");
  if (!env) return;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (!end || *end != '\0' || v <= 0)
    throw UsageError("FSL_THREADS must be a positive integer");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    validate_threads_env();
    if (args.size() < 2) throw UsageError("missing command");
    const std::string& cmd = args[0];
    const std::string& sub = args[1];
    const std::set<std::string> vals = {"family", "k",       "bound", "cap",
                                        "group",  "dim",     "weights",
                                        "degrees", "ambient", "tol",   "p",
                                        "rays"};
    const std::set<std::string> switches = {"cy"};
    Flags flags = parse_flags(args, 2, vals, switches);

    Report rep;
    if (cmd == "reps" && sub == "min-degree") rep = reps_min_degree(flags);
    else if (cmd == "reps" && sub == "spectrum") rep = reps_spectrum(flags);
    else if (cmd == "molien" && sub == "spin-a") rep = molien_spin(flags);
    else if (cmd == "molien" && sub == "oracle") rep = molien_oracle(flags);
    else if (cmd == "wci" && sub == "bound") rep = wci_bound(flags);
    else if (cmd == "wci" && sub == "search") rep = wci_search(flags);
    else if (cmd == "wci" && sub == "example") rep = wci_example(flags);
    else if (cmd == "wci" && sub == "check") rep = wci_check(flags);
    else if (cmd == "fermat" && sub == "verdict") rep = fermat_verdict(flags);
    else if (cmd == "fermat" && sub == "suite") rep = fermat_suite(flags);
    else if (cmd == "toric" && sub == "classgroup") rep = toric_classgroup(flags);
    else if (cmd == "toric" && sub == "lemma42") rep = toric_lemma42(flags);
    else if (cmd == "bounds" && sub == "jordan") rep = bounds_jordan(flags);
    else if (cmd == "bounds" && sub == "sylow") rep = bounds_sylow(flags);
    else if (cmd == "suite" && sub == "acceptance") rep = suite_acceptance(out);
    else throw UsageError("unknown command '" + cmd + " " + sub + "'");

    out << (flags.json ? rep.to_json() : rep.to_text());
    return rep.all_claims_pass() ? kExitOk : kExitClaimFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << kUsage;
    return kExitUsage;
  } catch (const BudgetError& e) {
    err << "budget error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const spinmolien::ExplosionError& e) {
    err << "closure explosion: " << e.what() << "\n";
    return kExitBudget;
  } catch (const IndeterminateError& e) {
    err << "indeterminate: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << kUsage;
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitClaimFailed;
  }
}

}  // namespace fsl::cli
