#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nestfold/corpus.hpp"

namespace nestfold {
namespace check {

enum class Profile { Fast, Default, Thorough };
Profile profile_from_name(const std::string& name);  // "fast" | "default" | "thorough"

struct Bounds {
  Profile profile = Profile::Default;
  std::optional<std::size_t> max_size;   // overrides per-property value bound
  std::optional<std::size_t> max_index;  // overrides per-property index bound
  unsigned seed = 0;                     // reserved; checks are exhaustive
  bool audit = false;                    // record and audit evaluation traces
};

struct Counterexample {
  std::string detail;                    // family / quantified parameters
  IndexExpr index;
  std::vector<std::pair<std::string, Value>> inputs;
  Value lhs;
  Value rhs;
};

struct CheckReport {
  std::string property;
  std::size_t cases = 0;
  bool pass = true;
  std::optional<Counterexample> counterexample;
  double wall_ms = 0.0;
  // audit aggregates (populated when Bounds::audit)
  std::size_t audited_calls = 0;
  std::size_t violations = 0;
};

struct UnknownProperty : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& property_names();

CheckReport run_property(const std::string& name, const Bounds& bounds);
std::vector<CheckReport> run_suite(const Bounds& bounds);

struct AuditReport {
  std::size_t audited_calls = 0;
  std::size_t violations = 0;
  std::vector<CheckReport> reports;
};

// Reruns the suite with trace recording and aggregates descent audits.
AuditReport audit_termination(const Bounds& bounds);

std::string report_json(const CheckReport& r);
std::string report_line(const CheckReport& r);

}  // namespace check
}  // namespace nestfold
