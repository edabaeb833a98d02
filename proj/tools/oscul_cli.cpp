// Command-line front end. Talks to the engine only through the C API.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oscul/oscul.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitVerifyFail = 3;

struct Options {
  std::string json_path;
  std::string csv_path;
  bool timing = false;
  std::uint64_t seed = 1;
  std::string field = "prime";

  int n = 0, d = 0, k = 0, r = 0;
  int n_max = 0;
  bool check = false;
  int samples = 100;
  int lines = 50;
  int group_elements = 0;
  int dim_w = 0, dim_k = 0, trials = 1000;
  std::vector<std::int64_t> x;
  std::size_t budget = 4'000'000;
};

osc_field field_of(const std::string& f) { return f == "rational" ? OSC_FIELD_RATIONAL : OSC_FIELD_PRIME; }

bool write_csv(const std::string& path, const std::string& json_text) {
  const auto doc = nlohmann::json::parse(json_text);
  std::ofstream os(path);
  if (!os) return false;
  os << "n,d,count\n";
  const auto& res = doc["result"];
  auto emit = [&](const nlohmann::json& n, const nlohmann::json& d, const nlohmann::json& c) {
    os << n.get<int>() << ',' << d.get<int>() << ',' << (c.is_null() ? std::string() : c.get<std::string>()) << '\n';
  };
  if (res.contains("rows"))
    for (const auto& row : res["rows"]) emit(row["n"], row["d"], row["count"]);
  else
    emit(doc["params"]["n"], doc["params"]["d"], res["count"]);
  return static_cast<bool>(os);
}

int finish(osc_status status, osc_result* result, const Options& opt, double elapsed_ms) {
  if (!result) {
    std::cerr << "error: " << osc_last_error() << '\n';
    return kExitPrecondition;
  }
  auto doc = nlohmann::json::parse(osc_result_json(result));
  if (opt.timing) doc["elapsed_ms"] = elapsed_ms;
  const std::string serialized = doc.dump(2) + "\n";

  if (opt.json_path == "-") {
    std::cout << serialized;
  } else {
    std::cout << osc_result_text(result);
    if (!opt.json_path.empty()) {
      std::ofstream os(opt.json_path, std::ios::binary);
      os << serialized;
      if (!os) {
        std::cerr << "error: cannot write " << opt.json_path << '\n';
        osc_result_free(result);
        return kExitPrecondition;
      }
    }
  }
  if (!opt.csv_path.empty() && !write_csv(opt.csv_path, osc_result_json(result))) {
    std::cerr << "error: cannot write " << opt.csv_path << '\n';
    osc_result_free(result);
    return kExitPrecondition;
  }
  const bool passed = osc_result_passed(result) != 0;
  osc_result_free(result);
  if (status == OSC_ERR_VERIFICATION_FAILED || !passed) {
    std::cerr << "verification FAILED\n";
    return kExitVerifyFail;
  }
  return 0;
}

template <class Fn>
int timed(const Options& opt, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  osc_result* result = nullptr;
  const osc_status status = fn(&result);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return finish(status, result, opt, ms);
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"oscul: line counts, osculating loci and verification lab for hypersurfaces in P^n"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--json", opt.json_path, "Write the structured result document to FILE ('-' for stdout)");
  app.add_flag("--timing", opt.timing, "Add elapsed_ms to the structured document");
  app.add_option("--seed", opt.seed, "Random seed")->envname("OSCUL_SEED");
  app.add_option("--field", opt.field, "Scalar field for the verification lab")
      ->check(CLI::IsMember({"prime", "rational"}));

  auto* count = app.add_subcommand("count-lines", "Lines on a general degree-d hypersurface in P^n");
  count->add_option("--n", opt.n, "Ambient dimension (first n of a table)")->required();
  count->add_option("--d", opt.d, "Degree (ignored with --n-max; d = 2n - 3)");
  count->add_option("--n-max", opt.n_max, "Emit a table for n..n-max with d = 2n - 3");
  count->add_flag("--check", opt.check, "Also evaluate the Bott localization oracle and compare");
  count->add_option("--csv", opt.csv_path, "Write (n, d, count) rows as CSV");

  auto* numer = app.add_subcommand("numerology", "Numerical data attached to d = 2n - 2 - k");
  numer->add_option("--n", opt.n)->required();
  numer->add_option("--k", opt.k)->required();

  auto* osc = app.add_subcommand("osculating", "Class, dimension and degree of the osculating locus");
  osc->add_option("--n", opt.n)->required();
  osc->add_option("--d", opt.d)->required();
  osc->add_option("--r", opt.r, "Contact order (default min(d, 2n - 1))");

  auto* canon = app.add_subcommand("canonical", "Canonical classes on the incidence variety");
  canon->add_option("--n", opt.n)->required();
  canon->add_option("--d", opt.d)->required();

  auto* swept = app.add_subcommand("swept-degree", "Degree of the locus swept by lines");
  swept->add_option("--n", opt.n)->required();
  swept->add_option("--d", opt.d)->required();

  auto* oracle = app.add_subcommand("oracle", "Bott localization line count");
  oracle->add_option("--n", opt.n)->required();
  oracle->add_option("--d", opt.d)->required();

  auto* verify = app.add_subcommand("verify", "Finite linear-algebra checks");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto* gg_pn = verify->add_subcommand("gg-pn", "Global generation of M^d(1) on P^n");
  gg_pn->add_option("--n", opt.n)->required();
  gg_pn->add_option("--d", opt.d)->required();
  gg_pn->add_option("--samples", opt.samples, "Random points");
  auto* gg_gr = verify->add_subcommand("gg-gr", "Global generation of M^1_G(1) on G(1, n)");
  gg_gr->add_option("--n", opt.n)->required();
  gg_gr->add_option("--lines", opt.lines, "Random lines");
  gg_gr->add_option("--group-elements", opt.group_elements, "Sections used (default max(5, n + 1))");
  auto* wedge2 = verify->add_subcommand("wedge2", "Image of sections of wedge^2 M^d(1) in one fibre");
  wedge2->add_option("--n", opt.n)->required();
  wedge2->add_option("--d", opt.d)->required();
  wedge2->add_option("--x", opt.x, "Point coordinates (default: random from seed)")->delimiter(',');
  wedge2->add_option("--budget", opt.budget, "Maximum Koszul matrix entries");
  auto* lemma = verify->add_subcommand("lemma-linalg", "Alternating contraction image codimension");
  lemma->add_option("--dim-w", opt.dim_w, "dim W (0 sweeps 1..6)");
  lemma->add_option("--dim-k", opt.dim_k, "dim K (0 sweeps 1..3)");
  lemma->add_option("--trials", opt.trials, "Trials per (dim W, dim K)");
  auto* contact = verify->add_subcommand("contact", "Rank of contact conditions");
  contact->add_option("--n", opt.n)->required();
  contact->add_option("--d", opt.d)->required();
  contact->add_option("--samples", opt.samples, "Random (x, l) pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const osc_field field = field_of(opt.field);
  if (count->parsed()) {
    if (opt.n_max > 0)
      return timed(opt, [&](osc_result** r) {
        return osc_count_lines_table(opt.n, opt.n_max, opt.check, opt.seed, r);
      });
    if (count->count("--d") == 0) {
      std::cerr << "error: count-lines needs --d (or --n-max for a table)\n\n" << count->help();
      return kExitUsage;
    }
    return timed(opt, [&](osc_result** r) { return osc_count_lines(opt.n, opt.d, opt.check, opt.seed, r); });
  }
  if (numer->parsed()) return timed(opt, [&](osc_result** r) { return osc_numerology(opt.n, opt.k, r); });
  if (osc->parsed()) return timed(opt, [&](osc_result** r) { return osc_osculating(opt.n, opt.d, opt.r, r); });
  if (canon->parsed()) return timed(opt, [&](osc_result** r) { return osc_canonical(opt.n, opt.d, r); });
  if (swept->parsed()) return timed(opt, [&](osc_result** r) { return osc_swept_degree(opt.n, opt.d, r); });
  if (oracle->parsed()) return timed(opt, [&](osc_result** r) { return osc_oracle(opt.n, opt.d, opt.seed, r); });
  if (gg_pn->parsed())
    return timed(opt, [&](osc_result** r) {
      return osc_verify_gg_pn(opt.n, opt.d, opt.samples, field, opt.seed, r);
    });
  if (gg_gr->parsed()) {
    const int groups = opt.group_elements > 0 ? opt.group_elements : std::max(5, opt.n + 1);
    return timed(opt, [&](osc_result** r) {
      return osc_verify_gg_gr(opt.n, opt.lines, groups, field, opt.seed, r);
    });
  }
  if (wedge2->parsed())
    return timed(opt, [&](osc_result** r) {
      return osc_verify_wedge2(opt.n, opt.d, opt.x.data(), opt.x.size(), field, opt.seed, opt.budget, r);
    });
  if (lemma->parsed())
    return timed(opt, [&](osc_result** r) {
      return osc_verify_lemma_linalg(opt.dim_w, opt.dim_k, opt.trials, field, opt.seed, r);
    });
  if (contact->parsed())
    return timed(opt, [&](osc_result** r) {
      return osc_verify_contact(opt.n, opt.d, opt.samples, field, opt.seed, r);
    });
  std::cerr << app.help();
  return kExitUsage;
}
