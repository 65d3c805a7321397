#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "dicot/engine.hpp"

namespace dicot::acceptance {

/// Exhaustive replaces the birthday-3 samples of criteria 2 and 3 by every
/// form of birthday 3.
enum class Level { Quick, Full, Exhaustive };

struct CriterionResult {
  std::string id;
  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  double seconds = 0;
  /// First few violations, in forms notation.
  std::vector<std::string> failures;

  bool passed() const { return cases > 0 && violations == 0; }
};

struct Config {
  /// Birthday-3 forms drawn for the invertibility equivalence.
  std::size_t theorem_samples = 10000;
  /// Birthday-3 forms drawn for the property suites.
  std::size_t property_samples = 1000;
  /// Birthday-3 forms added to the lemma sweep beyond the exhaustive part.
  std::size_t lemma_samples = 100;
  unsigned threads = 1;

  static Config for_level(Level level);
};

/// Outcome, order and invertibility facts of the named example games.
CriterionResult paper_regression(Engine& engine);
/// Follower criterion against g + (-g) = 0 on birthday <= 2 plus samples.
CriterionResult invertibility_equivalence(Engine& engine, const Config& config);
/// *2 among the followers forbids invertibility; invertibility is hereditary.
CriterionResult invertibility_corollaries(Engine& engine, const Config& config);
/// g > 0 never makes g + h - h < 0; lemma witnesses separate h - h from 0.
CriterionResult lemma_sweep(Engine& engine, const Config& config);
/// Algebraic property suites, one result each.
std::vector<CriterionResult> property_suites(Engine& engine, const Config& config);

/// Runs every criterion in order, reporting each as soon as it finishes.
std::vector<CriterionResult> run_all(
    Engine& engine, const Config& config,
    const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] 2  name  (cases, seconds)" plus indented failure lines.
std::string format(const CriterionResult& result);

}  // namespace dicot::acceptance
