#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "montype/classify.hpp"
#include "montype/linear_type.hpp"

namespace montype {

struct ScanConfig {
  std::size_t length = 4;   // facets of the linear cycle, >= 4
  std::size_t patches = 0;  // q, at most `length`
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  int max_degree = 0;  // 0: default for length + patches generators
  unsigned threads = 1;
  Budget budget;

  /// Threads and budget do not change results.
  friend bool operator==(const ScanConfig& a, const ScanConfig& b) {
    return a.length == b.length && a.patches == b.patches && a.trials == b.trials && a.seed == b.seed &&
           a.max_degree == b.max_degree;
  }
};

struct PatchedCycle {
  SimplicialComplex base;
  std::vector<PatchSpec> patches;
};

/// Random linear cycle with `length` facets: every adjacent pair shares one
/// or two private vertices, every facet gets zero to two free vertices.
/// Then `patches` compatible patches on distinct random edges, each taking
/// a free vertex from both covered facets, any of the shared vertices of
/// that edge, and maybe further unused free vertices. Redraws the cycle up
/// to 100 times; throws GenerationFailure if no patch system fits.
PatchedCycle random_patched_cycle(std::size_t length, std::size_t patches, std::mt19937_64& rng);

struct ScanTrial {
  std::size_t trial = 0;
  PatchedCycle instance;
  Certificate certificate;

  friend bool operator==(const ScanTrial& a, const ScanTrial& b) {
    return a.trial == b.trial && a.instance.base == b.instance.base &&
           a.instance.patches == b.instance.patches && a.certificate == b.certificate;
  }
};

struct ScanReport {
  ScanConfig config;
  int max_degree = 0;
  bool odd_parity = false;  // length + patches odd
  std::size_t linear_type = 0;
  std::size_t not_linear_type = 0;
  std::vector<ScanTrial> trials;
  /// Trials with odd parity and a NotLinearType verdict.
  std::vector<std::size_t> counterexample_candidates;

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

/// Trial t draws from mt19937_64 seeded by seed_seq{seed low, seed high, t},
/// so results do not depend on the thread count.
ScanReport conjecture_scan(const ScanConfig& config);

}  // namespace montype
