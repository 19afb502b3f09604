#include "montype/conjecture.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "montype/error.hpp"

namespace montype {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, int one_in) {
  return uniform(rng, 1, one_in) == 1;
}

}  // namespace

PatchedCycle random_patched_cycle(std::size_t length, std::size_t patches, std::mt19937_64& rng) {
  if (length < 4) throw Error(ErrorCode::PreconditionViolated, "cycle length must be at least 4");
  if (patches > length) throw Error(ErrorCode::PreconditionViolated, "more patches than edges");

  for (int attempt = 0; attempt < 100; ++attempt) {
    int next_vertex = 1;
    std::vector<VertexSet> shared(length);  // edge e joins facets e and e+1
    std::vector<VertexSet> free(length);
    for (auto& e : shared) {
      for (int k = uniform(rng, 1, 2); k > 0; --k) e.push_back(next_vertex++);
    }
    for (auto& f : free) {
      for (int k = uniform(rng, 0, 2); k > 0; --k) f.push_back(next_vertex++);
    }
    std::vector<VertexSet> facets(length);
    for (std::size_t f = 0; f < length; ++f) {
      facets[f] = sets::unite(sets::unite(shared[(f + length - 1) % length], shared[f]), free[f]);
    }

    std::vector<std::size_t> edges(length);
    for (std::size_t e = 0; e < length; ++e) edges[e] = e;
    std::shuffle(edges.begin(), edges.end(), rng);
    edges.resize(patches);
    std::sort(edges.begin(), edges.end());

    std::vector<bool> used(static_cast<std::size_t>(next_vertex), false);
    auto take_free = [&](std::size_t facet) -> int {
      std::vector<int> options;
      for (int v : free[facet]) {
        if (!used[static_cast<std::size_t>(v)]) options.push_back(v);
      }
      if (options.empty()) return 0;
      const int v = options[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(options.size()) - 1))];
      used[static_cast<std::size_t>(v)] = true;
      return v;
    };

    std::vector<PatchSpec> specs;
    bool ok = true;
    for (std::size_t e : edges) {
      const std::size_t a = e;
      const std::size_t b = (e + 1) % length;
      const int va = take_free(a);
      const int vb = take_free(b);
      if (!va || !vb) {
        ok = false;
        break;
      }
      PatchSpec spec{{va, vb}, std::min(a, b), std::max(a, b)};
      for (int v : shared[e]) {
        if (coin(rng, 2)) spec.patch.push_back(v);
      }
      specs.push_back(std::move(spec));
    }
    if (!ok) continue;
    for (std::size_t p = 0; p < specs.size(); ++p) {
      for (std::size_t facet : {specs[p].first, specs[p].second}) {
        for (int v : free[facet]) {
          if (!used[static_cast<std::size_t>(v)] && coin(rng, 4)) {
            used[static_cast<std::size_t>(v)] = true;
            specs[p].patch.push_back(v);
          }
        }
      }
      std::sort(specs[p].patch.begin(), specs[p].patch.end());
    }

    PatchedCycle out{build_complex(std::move(facets), next_vertex - 1), std::move(specs)};
    if (validate_patches(out.base, out.patches)) continue;
    return out;
  }
  throw Error(ErrorCode::GenerationFailure, "no compatible patch system after 100 draws");
}

ScanReport conjecture_scan(const ScanConfig& config) {
  if (config.length < 4) throw Error(ErrorCode::PreconditionViolated, "cycle length must be at least 4");
  if (config.trials < 1) throw Error(ErrorCode::PreconditionViolated, "at least one trial");
  ScanReport report;
  report.config = config;
  report.max_degree = config.max_degree ? config.max_degree : default_max_degree(config.length + config.patches);
  report.odd_parity = (config.length + config.patches) % 2 == 1;
  report.trials.resize(config.trials);

  VerifyOptions options;
  options.budget = config.budget;
  std::vector<std::exception_ptr> failures(config.trials);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t t = next++; t < config.trials; t = next++) {
      try {
        std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                          static_cast<std::uint32_t>(t)};
        std::mt19937_64 rng(seq);
        ScanTrial& row = report.trials[t];
        row.trial = t;
        row.instance = random_patched_cycle(config.length, config.patches, rng);
        const auto complex = attach_patches(row.instance.base, row.instance.patches);
        row.certificate = verify_linear_type(facet_ideal(complex), report.max_degree, options);
      } catch (...) {
        failures[t] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(config.threads, static_cast<unsigned>(config.trials)));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  for (const auto& row : report.trials) {
    if (row.certificate.verdict == Verdict::LinearTypeUpTo) {
      ++report.linear_type;
    } else {
      ++report.not_linear_type;
      if (report.odd_parity) report.counterexample_candidates.push_back(row.trial);
    }
  }
  return report;
}

}  // namespace montype
