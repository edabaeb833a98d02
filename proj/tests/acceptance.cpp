// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria. argv[1], when given, is the path of the CLI
// executable used for the determinism criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oscul/chern.hpp"
#include "oscul/enumerative.hpp"
#include "oscul/incidence.hpp"
#include "oscul/littlewood_richardson.hpp"
#include "oscul/multipoly.hpp"
#include "oscul/schubert.hpp"
#include "oscul/verification.hpp"

using namespace oscul;

namespace {

// Pinned tolerances.
constexpr double kLineCountSeconds = 5.0;
constexpr int kBottSeedsPerN = 3;
constexpr int kContactSamples = 100;
constexpr int kRandomTriples = 1000;
constexpr int kGgPnSamples = 100;
constexpr int kGgGrLines = 50;
constexpr int kLemmaTrialsTotal = 10000;
constexpr std::uint64_t kSeed = 20260101;

struct Criterion {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string str(const BigInt& b) { return to_string(b); }

void criterion1(Criterion& c) {
  const std::vector<std::tuple<int, int, std::string>> anchors{{3, 3, "27"}, {4, 5, "2875"}, {5, 7, "698005"}};
  for (const auto& [n, d, expected] : anchors) {
    const auto t0 = std::chrono::steady_clock::now();
    const LineCount lc = count_lines(n, d);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(lc.count && str(*lc.count) == expected, "count_lines(" + std::to_string(n) + "," + std::to_string(d) + ")");
    c.expect(secs < kLineCountSeconds, "count_lines(" + std::to_string(n) + ") took " + std::to_string(secs) + "s");
  }
  for (int n = 3; n <= 8; ++n) {
    const BigInt engine = *count_lines(n, 2 * n - 3).count;
    for (int s = 0; s < kBottSeedsPerN; ++s) {
      const std::uint64_t seed = derive_seed(kSeed, 100 * n + s);
      const BottResult b = bott_count_lines_seeded(n, 2 * n - 3, seed);
      c.expect(b.value == engine, "bott n=" + std::to_string(n) + " seed=" + std::to_string(seed));
    }
  }
}

void criterion2(Criterion& c) {
  for (int n = 2; n <= 10; ++n) {
    const IncidenceCtx ctx(n);
    const IncidenceClass H = IncidenceClass::H(ctx), L = IncidenceClass::L(ctx);
    const IncidenceClass expected_kp = H * BigInt(-2) - L * BigInt(n);
    c.expect(canonical_P(ctx) == expected_kp, "K_P closed form n=" + std::to_string(n));
    c.expect(canonical_P_relative(ctx) == expected_kp, "K_P relative route n=" + std::to_string(n));
    for (int d = 3; d <= 2 * (n - 1); ++d) {
      const std::string tag = " n=" + std::to_string(n) + " d=" + std::to_string(d);
      c.expect(bundle_Fd(ctx, d).c(1) == L * BigInt(d * (d - 1) / 2) + H * BigInt(d), "c1(F_d)" + tag);
      const CanonicalReport rep = canonical_osculating(ctx, d);
      c.expect(rep.canonical == H * BigInt(d - 2) + L * BigInt(d * (d - 1) / 2 - n), "K_Delta" + tag);
    }
  }
  for (int n = 6; n <= 12; ++n)
    for (int k = 1; k <= n - 5; ++k)
      c.expect(canonical_osculating(IncidenceCtx(n), 2 * n - 2 - k).very_ample,
               "very_ample n=" + std::to_string(n) + " k=" + std::to_string(k));
}

void criterion3(Criterion& c) {
  const std::vector<int> expected{9, 24, 45, 72, 105, 144};
  for (int d = 3; d <= 8; ++d) {
    const BigInt deg = osculating_degree(IncidenceCtx(2), d);
    c.expect(deg == expected[d - 3] && deg == 3 * d * (d - 2), "osculating_degree(2," + std::to_string(d) + ")");
  }
}

void criterion4(Criterion& c) {
  for (int n = 6; n <= 12; ++n)
    for (int k = 1; k <= n - 5; ++k) {
      const int d = 2 * n - 2 - k;
      const std::string tag = " n=" + std::to_string(n) + " k=" + std::to_string(k);
      c.expect(osculating_class(IncidenceCtx(n), d).dim == k + 1, "osculating dim" + tag);
      const NumerologyReport r = numerology(n, k);
      c.expect(r.codim == n - k - 1 && r.codim >= 4, "codim" + tag);
    }
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 6; ++d) {
      const ContactSurvey s = contact_survey(n, d, kContactSamples, FieldKind::Prime, derive_seed(kSeed, 10 * n + d));
      bool ok = s.pass;
      for (int r = 1; r <= d + 1; ++r) ok = ok && s.min_rank[r] == std::size_t(r) && s.max_rank[r] == std::size_t(r);
      c.expect(ok, "contact rank n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
}

Partition random_partition(std::mt19937_64& rng, int weight, int max_rows, int max_cols) {
  // Rejection sample from the partitions of `weight` fitting the box.
  const std::vector<Partition> all = partitions_in_box(max_rows, max_cols, weight);
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

void criterion5(Criterion& c) {
  const std::vector<int> catalan{1, 2, 5, 14, 42};
  for (int n = 2; n <= 6; ++n) {
    const GrassCtx g(2, n + 1);
    CohClass p = CohClass::one(g);
    for (int i = 0; i < 2 * (n - 1); ++i) p = p * sigma1(g);
    c.expect(integrate(p) == catalan[n - 2], "Catalan n=" + std::to_string(n));
  }
  {
    const GrassCtx g(2, 5);
    const auto box = partitions_in_box(2, 3);
    for (const Partition& a : box)
      for (const Partition& b : box)
        c.expect(integrate(CohClass::schubert(g, a) * CohClass::schubert(g, b)) == (b == poincare_dual(g, a) ? 1 : 0),
                 "duality " + a.str() + " " + b.str());
  }
  std::mt19937_64 rng(kSeed);
  for (int t = 0; t < kRandomTriples; ++t) {
    const int w = std::uniform_int_distribution<int>(0, 12)(rng);
    const int a = std::uniform_int_distribution<int>(0, w)(rng);
    const Partition nu = random_partition(rng, w, w, w);
    const Partition lam = random_partition(rng, a, a, a);
    const Partition mu = random_partition(rng, w - a, w - a, w - a);
    c.expect(lr_coefficient(lam, mu, nu) == lr_coefficient(mu, lam, nu), "LR symmetry trial " + std::to_string(t));
  }
  const GrassCtx g(2, 6);
  const auto box = partitions_in_box(2, 4);
  std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
  for (int t = 0; t < kRandomTriples; ++t) {
    const CohClass x = CohClass::schubert(g, box[pick(rng)]);
    const CohClass y = CohClass::schubert(g, box[pick(rng)]);
    const CohClass z = CohClass::schubert(g, box[pick(rng)]);
    c.expect((x * y) * z == x * (y * z) && x * y == y * x, "associativity trial " + std::to_string(t));
  }
}

void criterion6(Criterion& c) {
  const GrassCtx g(2, 8);
  const auto s = tautological_sub_dual(g);
  for (int d = 1; d <= 8; ++d) {
    const std::vector<MultiPoly> oracle = sym_power_chern_polys_by_roots(d);
    const std::vector<CohClass> gens{s.c(1), s.c(2)};
    const FormalBundle<CohClass> e = sym_power_rank2(s, d);
    for (int k = 0; k <= d + 1; ++k)
      c.expect(e.c(k) == evaluate_in<CohClass>(oracle[k], gens, s.one()),
               "Sym^" + std::to_string(d) + " c_" + std::to_string(k));
  }
  for (int d = 1; d <= 10; ++d)
    c.expect(sym_power_bundle(g, d).c(1) == sigma1(g) * BigInt(d * (d + 1) / 2), "c1 Sym^" + std::to_string(d));
}

void criterion7(Criterion& c) {
  for (int n = 2; n <= 3; ++n)
    for (int d = 1; d <= 3; ++d) {
      const std::uint64_t seed = derive_seed(kSeed, 1000 + 10 * n + d);
      const GenerationReport g = check_gg_Mpn(n, d, kGgPnSamples, FieldKind::Prime, seed);
      c.expect(g.pass, "gg-pn n=" + std::to_string(n) + " d=" + std::to_string(d));
      // A recorded sample seed reproduces its rank.
      if (!g.samples.empty()) {
        const GenerationReport again = check_gg_Mpn(n, d, kGgPnSamples, FieldKind::Prime, seed);
        c.expect(again.samples.back().rank == g.samples.back().rank && again.samples.back().seed == g.samples.back().seed,
                 "gg-pn reproducibility n=" + std::to_string(n) + " d=" + std::to_string(d));
      }
    }
  for (int n = 3; n <= 5; ++n) {
    const GenerationReport g = check_gg_MG(n, kGgGrLines, std::max(5, n + 1), FieldKind::Prime, derive_seed(kSeed, 2000 + n));
    c.expect(g.pass, "gg-gr n=" + std::to_string(n));
  }
  const int cases = 6 * 3;
  const int per_case = (kLemmaTrialsTotal + cases - 1) / cases;
  int total = 0;
  for (int w = 1; w <= 6; ++w)
    for (int k = 1; k <= 3; ++k) {
      const std::uint64_t seed = derive_seed(kSeed, 3000 + 16 * w + k);
      const LinAlgReport r = lemma_linalg_check(w, k, per_case, FieldKind::Prime, seed);
      total += r.trials;
      c.expect(r.pass, "lemma dimW=" + std::to_string(w) + " dimK=" + std::to_string(k));
      for (std::uint64_t bad : r.violating_seeds)
        c.expect(lemma_linalg_trial(w, k, bad, FieldKind::Rational).value_or(0) > 2,
                 "violating seed " + std::to_string(bad) + " does not reproduce");
      // Trial seeds reproduce their outcome.
      const std::uint64_t first = derive_seed(seed, 0);
      c.expect(lemma_linalg_trial(w, k, first, FieldKind::Prime) == lemma_linalg_trial(w, k, first, FieldKind::Prime),
               "lemma trial reproducibility");
    }
  c.expect(total >= kLemmaTrialsTotal, "lemma trial total " + std::to_string(total));
  for (int d = 1; d <= 2; ++d) {
    try {
      const Wedge2Report w = wedge2_image_report(2, d, {}, FieldKind::Prime, derive_seed(kSeed, 4000 + d));
      c.expect(w.values_in_fiber && w.witnesses_in_image && w.witnesses_checked > 0,
               "wedge2 witness consistency d=" + std::to_string(d));
    } catch (const std::exception& e) {
      c.expect(false, std::string("wedge2 d=") + std::to_string(d) + ": " + e.what());
    }
  }
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion8(Criterion& c, const char* cli) {
  if (!cli) {
    c.expect(false, "CLI path not supplied");
    return;
  }
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / ("oscul-accept-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::vector<std::string> invocations{
      "--seed 11 count-lines --n 5 --d 7 --check",
      "--seed 11 oracle --n 6 --d 9",
      "--seed 11 canonical --n 7 --d 10",
      "--seed 11 osculating --n 3 --d 4",
      "--seed 11 verify gg-pn --n 3 --d 2 --samples 5",
      "--seed 11 verify gg-gr --n 4 --lines 5",
      "--seed 11 verify lemma-linalg --dim-w 4 --dim-k 2 --trials 200",
      "--seed 11 verify wedge2 --n 2 --d 2",
      "--seed 11 verify contact --n 3 --d 3 --samples 5",
      "--seed 11 --field rational verify gg-pn --n 2 --d 2 --samples 3",
  };
  int idx = 0;
  for (const std::string& args : invocations) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const std::filesystem::path file = dir / (std::to_string(idx) + "-" + std::to_string(run) + ".json");
      const std::string cmd = std::string("\"") + cli + "\" --json \"" + file.string() + "\" " + args + " > /dev/null";
      const int status = std::system(cmd.c_str());
      c.expect(status == 0, "exit status of: " + args);
      outputs[run] = slurp(file);
    }
    c.expect(!outputs[0].empty() && outputs[0] == outputs[1], "byte-identical output: " + args);
    ++idx;
  }
  std::filesystem::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"line counts", criterion1},
      {"canonical formulas", criterion2},
      {"plane flex degrees", criterion3},
      {"dimension bookkeeping", criterion4},
      {"Schubert engine properties", criterion5},
      {"Sym-power correctness", criterion6},
      {"verification lab", criterion7},
      {"determinism", [cli](Criterion& c) { criterion8(c, cli); }},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d (%s) [%.2fs]\n", c.failures.empty() ? "PASS" : "FAIL", index, name.c_str(), secs);
    for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) std::printf("    %s\n", c.failures[i].c_str());
    if (c.failures.size() > 10) std::printf("    ... %zu more\n", c.failures.size() - 10);
    std::fflush(stdout);
    failed += !c.failures.empty();
    ++index;
  }
  return failed;
}
