#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "riesz/numeric/budget.hpp"
#include "riesz/tensor/grid.hpp"

namespace riesz::suites {

struct SuiteConfig {
  std::uint64_t seed = 1;
  /// Overrides the main case count of each part when nonzero.
  std::size_t trials = 0;
  num::Budget budget;
  std::size_t fuel = 0;
  tensor::GridSpec grid;
};

struct SuiteResult {
  SuiteResult() = default;
  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t passed = 0;
  /// First failing case, minimized where the part knows how.
  nlohmann::json counterexample;
  std::vector<SuiteResult> parts;
  /// Wall time of this part in seconds. Not part of the JSON report.
  double seconds = 0;

  bool ok() const;
  std::size_t total_cases() const;
  std::size_t total_passed() const;
  nlohmann::json to_json() const;
};

/// l1, rewriter, tensor, bimorph, convergence, closure, kernel, all.
const std::vector<std::string>& suite_names();
/// Throws DomainError for an unknown name.
SuiteResult run_suite(std::string_view name, const SuiteConfig& cfg);

// Individual parts; each draws from its own named stream of cfg.seed.
SuiteResult part_l1_bound(const SuiteConfig& cfg);        // 0 <= a^2 <= a + a^3
SuiteResult part_l1_pospos(const SuiteConfig& cfg);       // a+ b+ rewrite
SuiteResult part_rewriter(const SuiteConfig& cfg);        // product certificates
SuiteResult part_transport(const SuiteConfig& cfg);       // certificates under homomorphisms
SuiteResult part_tensor_closure(const SuiteConfig& cfg);  // riesz_tensor_check
SuiteResult part_tensor_mul(const SuiteConfig& cfg);      // (a (x) b)(a' (x) b') rule on grids
SuiteResult part_weak_unit(const SuiteConfig& cfg);
SuiteResult part_kar(const SuiteConfig& cfg);
SuiteResult part_kar_exhaustive(const SuiteConfig& cfg);
SuiteResult part_az(const SuiteConfig& cfg);
SuiteResult part_bimorphism(const SuiteConfig& cfg);
SuiteResult part_convergence(const SuiteConfig& cfg);
SuiteResult part_span(const SuiteConfig& cfg);
SuiteResult part_ladder(const SuiteConfig& cfg);
SuiteResult part_roots(const SuiteConfig& cfg);

}  // namespace riesz::suites
