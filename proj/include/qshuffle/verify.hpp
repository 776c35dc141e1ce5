#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qshuffle {

struct SweepOptions {
  std::uint32_t q = 2;
  int weight_cap = 4;
  /// 0 picks the hardware concurrency (capped by QSHUFFLE_THREADS).
  int threads = 0;
  /// When set and smaller than the number of cases, check a seeded random subset.
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
};

struct Witness {
  std::string input;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string property;
  std::uint32_t q = 2;
  int weight_cap = 0;
  std::uint64_t cases = 0;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::vector<Witness> witnesses;
  bool sampled = false;
  std::uint64_t seed = 0;
  double wall_seconds = 0;

  bool pass() const { return failed == 0; }
  nlohmann::json to_json(bool timing = false) const;
  std::string to_text(bool timing = false) const;
};

/// comm, assoc-R, assoc-E, ehat-hom, pi-hom, phi-iso, phi-roundtrip, phi-hom,
/// lemma-3-7, lemma-3-8, lemma-3-9, basis.
const std::vector<std::string>& property_names();
bool is_property(const std::string& name);

/// Runs the sweep for one property; throws std::invalid_argument for an
/// unknown name or bad options.
VerificationReport verify_property(const std::string& name, const SweepOptions& opts);

/// Worker count: requested (or the hardware concurrency when 0), capped by
/// the QSHUFFLE_THREADS environment variable, at least 1.
int resolve_threads(int requested);

}  // namespace qshuffle
