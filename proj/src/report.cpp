#include "oscul/report.hpp"

#include <iomanip>
#include <sstream>

#include "oscul/enumerative.hpp"
#include "oscul/errors.hpp"
#include "oscul/verification.hpp"

namespace oscul {

using nlohmann::json;

namespace {

constexpr const char* kEngine = "schubert-engine";
constexpr const char* kOracle = "bott-oracle";
constexpr const char* kBoth = "both-agree";

std::string dec(const BigInt& v) { return to_string(v); }

std::string lab_provenance(FieldKind f) { return "verification-lab:" + to_string(f); }

class Table {
 public:
  explicit Table(std::string title) : title_(std::move(title)) {}
  Table& row(const std::string& key, const std::string& value) {
    rows_.emplace_back(key, value);
    width_ = std::max(width_, key.size());
    return *this;
  }
  std::string str() const {
    std::ostringstream os;
    os << title_ << '\n';
    for (const auto& [k, v] : rows_) os << "  " << std::left << std::setw(static_cast<int>(width_) + 2) << k << v << '\n';
    return os.str();
  }

 private:
  std::string title_;
  std::vector<std::pair<std::string, std::string>> rows_;
  std::size_t width_ = 0;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }
std::string pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

std::string divisor_str(const BigInt& h, const BigInt& l) {
  return dec(h) + "H " + (l < 0 ? "- " : "+ ") + dec(abs(l)) + "L";
}

}  // namespace

json CommandResult::document() const {
  json doc;
  doc["command"] = command;
  doc["params"] = params;
  doc["result"] = result;
  doc["provenance"] = provenance;
  doc["seed"] = seed ? json(std::to_string(*seed)) : json(nullptr);
  return doc;
}

std::string CommandResult::json_string() const { return document().dump(2); }

json to_json(const CohClass& c) {
  json terms = json::array();
  for (const auto& [p, coeff] : c.terms()) terms.push_back({{"partition", p.parts()}, {"coeff", dec(coeff)}});
  return terms;
}

json to_json(const IncidenceClass& c) {
  return {{"A", to_json(c.a())}, {"B", to_json(c.b())}, {"text", c.str()}};
}

CommandResult run_count_lines(int n, int d, bool check, std::uint64_t seed) {
  CommandResult r;
  r.command = "count-lines";
  r.params = {{"n", n}, {"d", d}, {"check", check}};
  const LineCount lc = count_lines(n, d);
  r.result["regime"] = to_string(lc.regime);
  r.result["fano_dim"] = lc.fano_dim;
  Table t("count-lines  n=" + std::to_string(n) + " d=" + std::to_string(d));
  if (!lc.count) {
    r.result["count"] = nullptr;
    r.provenance = kEngine;
    std::string why = lc.regime == FanoRegime::PositiveDimensional
                          ? "lines form a family of dimension " + std::to_string(lc.fano_dim) + "; no finite count"
                          : "no lines on a general hypersurface (expected Fano dimension " +
                                std::to_string(lc.fano_dim) + ")";
    r.result["explanation"] = why;
    t.row("regime", to_string(lc.regime)).row("fano_dim", std::to_string(lc.fano_dim)).row("note", why);
    r.text = t.str();
    return r;
  }
  r.result["count"] = dec(*lc.count);
  r.provenance = kEngine;
  t.row("lines", dec(*lc.count));
  if (check) {
    const BottResult b = bott_count_lines_seeded(n, d, seed);
    r.seed = b.seed;
    r.result["oracle_count"] = dec(b.value);
    if (b.value != *lc.count) {
      r.passed = false;
      r.provenance = "disagreement";
      t.row("oracle", dec(b.value)).row("status", "ENGINE AND ORACLE DISAGREE");
    } else {
      r.provenance = kBoth;
      t.row("oracle", dec(b.value) + " (weights seed " + std::to_string(b.seed) + ")");
    }
  }
  t.row("provenance", r.provenance);
  r.text = t.str();
  return r;
}

CommandResult run_count_lines_table(int n_min, int n_max, bool check, std::uint64_t seed) {
  if (n_min < 2 || n_max < n_min) throw PreconditionError("table needs 2 <= n_min <= n_max");
  CommandResult r;
  r.command = "count-lines";
  r.params = {{"n_min", n_min}, {"n_max", n_max}, {"check", check}};
  r.provenance = check ? kBoth : kEngine;
  if (check) r.seed = seed;
  json rows = json::array();
  std::ostringstream os;
  os << "count-lines  d = 2n - 3\n  " << std::setw(4) << "n" << std::setw(5) << "d" << "  count\n";
  for (int n = n_min; n <= n_max; ++n) {
    const int d = 2 * n - 3;
    const CommandResult one = run_count_lines(n, d, check, seed);
    if (!one.passed) {
      r.passed = false;
      r.provenance = "disagreement";
    }
    rows.push_back({{"n", n}, {"d", d}, {"count", one.result["count"]}});
    os << "  " << std::setw(4) << n << std::setw(5) << d << "  " << one.result["count"].get<std::string>() << '\n';
  }
  r.result["rows"] = rows;
  r.text = os.str();
  return r;
}

CommandResult run_numerology(int n, int k) {
  CommandResult r;
  r.command = "numerology";
  r.params = {{"n", n}, {"k", k}};
  r.provenance = "closed-form";
  const NumerologyReport nr = numerology(n, k);
  r.result = {{"d", nr.d},
              {"N", dec(nr.N)},
              {"codim", nr.codim},
              {"canonical_twist", nr.canonical_twist},
              {"dim_delta", nr.dim_delta},
              {"fano_dim", nr.fano_dim},
              {"in_range", nr.in_range}};
  r.text = Table("numerology  n=" + std::to_string(n) + " k=" + std::to_string(k))
               .row("d = 2n-2-k", std::to_string(nr.d))
               .row("N = dim S^d", dec(nr.N))
               .row("codim", std::to_string(nr.codim))
               .row("K_X", "O(" + std::to_string(nr.canonical_twist) + ")")
               .row("dim Delta", std::to_string(nr.dim_delta))
               .row("fano_dim", std::to_string(nr.fano_dim))
               .row("in_range", yes_no(nr.in_range))
               .str();
  return r;
}

CommandResult run_osculating(int n, int d, int r_order) {
  CommandResult r;
  r.command = "osculating";
  const IncidenceCtx ctx(n);
  const int order = r_order == 0 ? default_contact_order(ctx, d) : r_order;
  r.params = {{"n", n}, {"d", d}, {"r", order}};
  r.provenance = kEngine;
  const OsculatingClass oc = osculating_class(ctx, d, order);
  const BigInt degree = osculating_degree(ctx, d, order);
  r.result = {{"class", to_json(oc.cls)}, {"dim", oc.dim}, {"contact_order", order}, {"degree", dec(degree)}};
  r.text = Table("osculating  n=" + std::to_string(n) + " d=" + std::to_string(d) + " r=" + std::to_string(order))
               .row("class", oc.cls.str())
               .row("dim", std::to_string(oc.dim))
               .row("degree", dec(degree))
               .str();
  return r;
}

CommandResult run_canonical(int n, int d) {
  CommandResult r;
  r.command = "canonical";
  r.params = {{"n", n}, {"d", d}};
  r.provenance = kEngine;
  const IncidenceCtx ctx(n);
  const IncidenceClass kp = canonical_P(ctx);
  const IncidenceClass kp_rel = canonical_P_relative(ctx);
  if (!(kp == kp_rel)) throw Error("canonical class routes disagree: " + kp.str() + " vs " + kp_rel.str());
  const auto [kh, kl] = kp.divisor_coefficients();
  const auto [fh, fl] = bundle_Fd(ctx, d).c(1).divisor_coefficients();
  const CanonicalReport ko = canonical_osculating(ctx, d);
  r.result = {{"K_P", {{"H", dec(kh)}, {"L", dec(kl)}}},
              {"K_P_routes_agree", true},
              {"det_F", {{"H", dec(fh)}, {"L", dec(fl)}}},
              {"K_osculating", {{"H", dec(ko.h_coeff)}, {"L", dec(ko.l_coeff)}}},
              {"very_ample", ko.very_ample}};
  r.text = Table("canonical  n=" + std::to_string(n) + " d=" + std::to_string(d))
               .row("K_P", divisor_str(kh, kl))
               .row("det F_d", divisor_str(fh, fl))
               .row("K_osc", divisor_str(ko.h_coeff, ko.l_coeff))
               .row("very_ample", yes_no(ko.very_ample))
               .str();
  return r;
}

CommandResult run_swept_degree(int n, int d) {
  CommandResult r;
  r.command = "swept-degree";
  r.params = {{"n", n}, {"d", d}};
  r.provenance = kEngine;
  const BigInt deg = swept_locus_degree(n, d);
  r.result = {{"degree", dec(deg)}, {"swept_dim", 2 * n - 2 - d}};
  r.text = Table("swept-degree  n=" + std::to_string(n) + " d=" + std::to_string(d))
               .row("degree", dec(deg))
               .row("swept_dim", std::to_string(2 * n - 2 - d))
               .str();
  return r;
}

CommandResult run_oracle(int n, int d, std::uint64_t seed) {
  CommandResult r;
  r.command = "oracle";
  r.params = {{"n", n}, {"d", d}};
  r.provenance = kOracle;
  const BottResult b = bott_count_lines_seeded(n, d, seed);
  r.seed = b.seed;
  json weights = json::array();
  for (const auto& w : make_weights(n, b.seed).weights) weights.push_back(dec(w));
  r.result = {{"count", dec(b.value)}, {"weights", weights}, {"attempts", b.attempts}};
  r.text = Table("oracle  n=" + std::to_string(n) + " d=" + std::to_string(d))
               .row("count", dec(b.value))
               .row("weights seed", std::to_string(b.seed))
               .str();
  return r;
}

namespace {

json samples_json(const GenerationReport& g) {
  json out = json::array();
  for (const auto& s : g.samples)
    out.push_back({{"seed", std::to_string(s.seed)}, {"rank", s.rank}, {"rechecked", s.rechecked_over_rationals}});
  return out;
}

CommandResult generation_result(const std::string& verb, const GenerationReport& g) {
  CommandResult r;
  r.command = "verify " + verb;
  r.provenance = lab_provenance(g.field);
  r.seed = g.seed;
  r.passed = g.pass;
  json failing = json::array();
  for (const auto& s : g.samples)
    if (s.rank != g.fiber_dim) failing.push_back(std::to_string(s.seed));
  r.result = {{"sections", g.sections},           {"sections_used", g.sections_used},
              {"fiber_dim", g.fiber_dim},         {"min_rank", g.min_rank},
              {"values_in_fiber", g.values_in_fiber}, {"verdict", pass_fail(g.pass)},
              {"failing_seeds", failing},         {"samples", samples_json(g)}};
  r.text = Table("verify " + verb + "  n=" + std::to_string(g.n) + " d=" + std::to_string(g.d))
               .row("sections", std::to_string(g.sections_used) + " of " + std::to_string(g.sections))
               .row("fiber_dim", std::to_string(g.fiber_dim))
               .row("min_rank", std::to_string(g.min_rank))
               .row("samples", std::to_string(g.samples.size()))
               .row("field", to_string(g.field))
               .row("verdict", pass_fail(g.pass))
               .str();
  return r;
}

}  // namespace

CommandResult run_verify_gg_pn(int n, int d, int samples, FieldKind field, std::uint64_t seed) {
  CommandResult r = generation_result("gg-pn", check_gg_Mpn(n, d, samples, field, seed));
  r.params = {{"n", n}, {"d", d}, {"samples", samples}, {"field", to_string(field)}};
  return r;
}

CommandResult run_verify_gg_gr(int n, int lines, int group_elements, FieldKind field, std::uint64_t seed) {
  CommandResult r = generation_result("gg-gr", check_gg_MG(n, lines, group_elements, field, seed));
  r.params = {{"n", n}, {"lines", lines}, {"group_elements", group_elements}, {"field", to_string(field)}};
  return r;
}

CommandResult run_verify_wedge2(int n, int d, const std::vector<std::int64_t>& x, FieldKind field,
                                std::uint64_t seed, std::size_t budget) {
  const Wedge2Report w = wedge2_image_report(n, d, x, field, seed, budget);
  CommandResult r;
  r.command = "verify wedge2";
  r.params = {{"n", n}, {"d", d}, {"field", to_string(field)}, {"budget", budget}};
  if (!x.empty()) r.params["x"] = x;
  r.provenance = lab_provenance(field);
  r.seed = seed;
  // Only the consistency checks gate the verdict; the rank is recorded.
  r.passed = w.values_in_fiber && w.witnesses_in_image;
  r.result = {{"x", w.x},
              {"kernel_dim", w.kernel_dim},
              {"image_rank", w.image_rank},
              {"fiber_dim", w.fiber_dim},
              {"values_in_fiber", w.values_in_fiber},
              {"witnesses_checked", w.witnesses_checked},
              {"witnesses_in_image", w.witnesses_in_image},
              {"rechecked_over_rationals", w.rechecked_over_rationals},
              {"verdict", pass_fail(r.passed)}};
  r.text = Table("verify wedge2  n=" + std::to_string(n) + " d=" + std::to_string(d))
               .row("sections", std::to_string(w.kernel_dim))
               .row("image_rank", std::to_string(w.image_rank))
               .row("fiber_dim", std::to_string(w.fiber_dim))
               .row("witnesses", std::string(w.witnesses_in_image ? "inside image" : "NOT inside image"))
               .row("verdict", pass_fail(r.passed))
               .str();
  return r;
}

CommandResult run_verify_lemma_linalg(int dim_w, int dim_k, int trials, FieldKind field, std::uint64_t seed) {
  CommandResult r;
  r.command = "verify lemma-linalg";
  r.params = {{"dim_w", dim_w}, {"dim_k", dim_k}, {"trials", trials}, {"field", to_string(field)}};
  r.provenance = lab_provenance(field);
  r.seed = seed;
  const int w_lo = dim_w == 0 ? 1 : dim_w, w_hi = dim_w == 0 ? 6 : dim_w;
  const int k_lo = dim_k == 0 ? 1 : dim_k, k_hi = dim_k == 0 ? 3 : dim_k;
  json cases = json::array();
  std::ostringstream os;
  os << "verify lemma-linalg  trials per case=" << trials << '\n'
     << "  dimW dimK  trials  vacuous  worst_codim  verdict\n";
  int total = 0;
  for (int w = w_lo; w <= w_hi; ++w)
    for (int k = k_lo; k <= k_hi; ++k) {
      const std::uint64_t case_seed = derive_seed(seed, static_cast<std::uint64_t>(w * 16 + k));
      const LinAlgReport lr = lemma_linalg_check(w, k, trials, field, case_seed);
      total += lr.trials;
      json bad = json::array();
      for (auto s : lr.violating_seeds) bad.push_back(std::to_string(s));
      cases.push_back({{"dim_w", w},
                       {"dim_k", k},
                       {"trials", lr.trials},
                       {"vacuous", lr.vacuous_trials},
                       {"worst_codim", lr.worst_codim},
                       {"case_seed", std::to_string(case_seed)},
                       {"violating_seeds", bad}});
      r.passed = r.passed && lr.pass;
      os << "  " << std::setw(4) << w << std::setw(5) << k << std::setw(8) << lr.trials << std::setw(9)
         << lr.vacuous_trials << std::setw(13) << lr.worst_codim << "  " << pass_fail(lr.pass) << '\n';
    }
  os << "  total trials " << total << ": " << pass_fail(r.passed) << '\n';
  r.result = {{"cases", cases}, {"total_trials", total}, {"verdict", pass_fail(r.passed)}};
  r.text = os.str();
  return r;
}

CommandResult run_verify_contact(int n, int d, int samples, FieldKind field, std::uint64_t seed) {
  const ContactSurvey sv = contact_survey(n, d, samples, field, seed);
  CommandResult r;
  r.command = "verify contact";
  r.params = {{"n", n}, {"d", d}, {"samples", samples}, {"field", to_string(field)}};
  r.provenance = lab_provenance(field);
  r.seed = seed;
  r.passed = sv.pass;
  json per_r = json::array();
  std::ostringstream os;
  os << "verify contact  n=" << n << " d=" << d << " N=" << sv.N << " samples=" << samples << '\n'
     << "     r  min_rank  max_rank  fiber_dim\n";
  for (int ord = 1; ord <= d + 1; ++ord) {
    per_r.push_back({{"r", ord}, {"min_rank", sv.min_rank[ord]}, {"max_rank", sv.max_rank[ord]},
                     {"fiber_dim", sv.N - sv.min_rank[ord]}});
    os << "  " << std::setw(4) << ord << std::setw(10) << sv.min_rank[ord] << std::setw(10) << sv.max_rank[ord]
       << std::setw(11) << sv.N - sv.min_rank[ord] << '\n';
  }
  json bad = json::array();
  for (auto s : sv.failing_seeds) bad.push_back(std::to_string(s));
  os << "  verdict " << pass_fail(sv.pass) << '\n';
  r.result = {{"N", sv.N}, {"orders", per_r}, {"failing_seeds", bad}, {"verdict", pass_fail(sv.pass)}};
  r.text = os.str();
  return r;
}

}  // namespace oscul
