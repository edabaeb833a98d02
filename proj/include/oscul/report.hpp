#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "oscul/incidence.hpp"
#include "oscul/linalg.hpp"
#include "oscul/schubert.hpp"

namespace oscul {

/// Outcome of one front-end command. `document()` is the structured form:
/// {command, params, result, provenance, seed}. Integers are rendered as
/// decimal strings. Timing is deliberately absent so identical inputs give
/// byte-identical documents.
struct CommandResult {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  std::string provenance;
  std::optional<std::uint64_t> seed;
  bool passed = true;  ///< false only for a failed verification
  std::string text;    ///< human-readable table

  nlohmann::json document() const;
  std::string json_string() const;
};

nlohmann::json to_json(const CohClass& c);
nlohmann::json to_json(const IncidenceClass& c);

CommandResult run_count_lines(int n, int d, bool check, std::uint64_t seed);
CommandResult run_count_lines_table(int n_min, int n_max, bool check, std::uint64_t seed);
CommandResult run_numerology(int n, int k);
/// r = 0 selects the default contact order min(d, 2n - 1).
CommandResult run_osculating(int n, int d, int r);
CommandResult run_canonical(int n, int d);
CommandResult run_swept_degree(int n, int d);
CommandResult run_oracle(int n, int d, std::uint64_t seed);

CommandResult run_verify_gg_pn(int n, int d, int samples, FieldKind field, std::uint64_t seed);
CommandResult run_verify_gg_gr(int n, int lines, int group_elements, FieldKind field, std::uint64_t seed);
CommandResult run_verify_wedge2(int n, int d, const std::vector<std::int64_t>& x, FieldKind field,
                                std::uint64_t seed, std::size_t budget);
CommandResult run_verify_lemma_linalg(int dim_w, int dim_k, int trials, FieldKind field, std::uint64_t seed);
CommandResult run_verify_contact(int n, int d, int samples, FieldKind field, std::uint64_t seed);

}  // namespace oscul
