#pragma once

// Law-verification harness: exhaustive and randomized checks of the monad
// laws, the hyperspace → capacity morphism and the integral identities.

#include <cstdint>
#include <string>
#include <vector>

namespace capkit {

struct LawCheck {
  explicit LawCheck(std::string name) : name(std::move(name)) {}

  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  /// Human-readable descriptions of the first few failing instances.
  std::vector<std::string> witnesses;

  void record(bool ok, const std::string& witness);
};

struct LawReport {
  std::string suite;
  std::vector<LawCheck> checks;

  [[nodiscard]] bool passed() const;
};

struct LawOptions {
  std::uint64_t seed = 20240601;
  /// Randomized instances per randomized check.
  std::size_t random_instances = 1000;
};

LawReport run_monad_m_laws(const LawOptions& options = {});
LawReport run_monad_g_laws(const LawOptions& options = {});
LawReport run_morphism_laws(const LawOptions& options = {});
LawReport run_integral_laws(const LawOptions& options = {});

/// Suite by name: "monad-m", "monad-g", "morphism" or "integrals".
LawReport run_law_suite(const std::string& suite, const LawOptions& options = {});

}  // namespace capkit
