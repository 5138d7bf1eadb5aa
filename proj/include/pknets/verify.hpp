#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "pknets/descriptors.hpp"

namespace pknets {

struct CheckRecord {
  std::string suite;
  std::string instance;
  std::string name;
  bool ok = false;
  /// The check hit a resource bound rather than failing.
  bool resource = false;
  std::string detail;
  nlohmann::json data = nlohmann::json::object();
};

struct VerifyReport {
  std::vector<CheckRecord> checks;

  bool ok() const;
  /// 0 all pass, 3 when every failure is a resource bound, else 1.
  int exit_code() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct VerifyOptions {
  /// Picks the randomized groupoid of the bisections suite.
  std::uint64_t seed = 1;
  Limits limits;
};

/// Suites: "groups", "functor-groupoid", "subgroupoid", "bisections", "all".
/// With a workspace the batteries run on its group, classes, section and
/// groupoid; without one on the built-in fixtures. Throws InputError for an
/// unknown suite.
VerifyReport run_verify(const std::string& suite, const Workspace* ws, const VerifyOptions& options = {});

const std::vector<std::string>& verify_suites();

/// Wreath multiplication against Zⁿ ⋊ Sₙ built from the coordinate action,
/// through the explicit map ⟨m,τ⟩ ↦ (m∘τ⁻¹, τ).
CheckResult check_wreath_semidirect(const FiniteGroup& z, std::uint32_t n, const Limits& limits = {});

}  // namespace pknets
