#include "montype/linear_type.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "montype/complex.hpp"
#include "montype/error.hpp"

namespace montype {

int default_max_degree(std::size_t generators) {
  return std::max(3, static_cast<int>((generators + 1) / 2) + 1);
}

namespace {

std::vector<std::size_t> resolve(const SquarefreeIdeal& ideal, const std::vector<std::size_t>& members) {
  if (!members.empty()) return members;
  std::vector<std::size_t> all(ideal.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

void check_membership(const ReesElement& e, const SquarefreeIdeal& ideal, ReductionStats& stats) {
  ++stats.substitution_checks;
  if (!vanishes_under_substitution(e, ideal)) {
    throw std::logic_error("element outside the defining ideal: " + e.to_string());
  }
}

void check_degree(int k) {
  if (k < 2) throw Error(ErrorCode::PreconditionViolated, "max degree must be at least 2");
}

// Relations of one degree, split into those to reduce and counted skips.
std::vector<TaylorRelation> degree_relations(const SquarefreeIdeal& ideal,
                                             const std::vector<std::size_t>& members, std::size_t k,
                                             bool shared, ReductionStats& stats) {
  auto all = taylor_relations(ideal, k, members, false);
  std::vector<TaylorRelation> keep;
  for (auto& r : all) {
    std::vector<std::size_t> common;
    std::set_intersection(r.alpha.begin(), r.alpha.end(), r.beta.begin(), r.beta.end(),
                          std::back_inserter(common));
    if (!shared && !common.empty()) {
      ++stats.shared_index_skipped;
      continue;
    }
    if (r.coincidence) ++stats.coincidences;
    keep.push_back(std::move(r));
  }
  return keep;
}

}  // namespace

std::vector<ReesElement> reduce_all(const std::vector<ReesElement>& elements,
                                    const GroebnerBasis& basis, unsigned threads) {
  std::vector<ReesElement> out(elements.size());
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(elements.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < elements.size(); ++i) out[i] = normal_form(elements[i], basis);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    try {
      for (std::size_t i = next++; i < elements.size() && !failed; i = next++) {
        out[i] = normal_form(elements[i], basis);
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return out;
}

GroebnerBasis linear_part_basis(const SquarefreeIdeal& ideal, int cap,
                                const std::vector<std::size_t>& members, const Budget& budget) {
  const auto gens = resolve(ideal, members);
  std::vector<ReesElement> linear;
  if (gens.size() >= 2) {
    for (auto& l : linear_relations(ideal, gens)) linear.push_back(std::move(l.element));
  }
  return buchberger(linear, term_order_for(ideal), cap, budget);
}

Certificate verify_component(const SquarefreeIdeal& ideal, const std::vector<std::size_t>& members,
                             int max_degree, const VerifyOptions& options) {
  check_degree(max_degree);
  const auto gens = resolve(ideal, members);
  Certificate cert;
  cert.max_degree = max_degree;
  if (gens.size() < 2) return cert;

  for (const auto& l : linear_relations(ideal, gens)) check_membership(l.element, ideal, cert.stats);
  const GroebnerBasis basis = linear_part_basis(ideal, max_degree + 1, gens, options.budget);
  for (const auto& g : basis.elements) check_membership(g, ideal, cert.stats);
  cert.groebner_basis_size = basis.elements.size();
  cert.stats.groebner = basis.stats;

  for (int k = 2; k <= max_degree; ++k) {
    auto relations = degree_relations(ideal, gens, static_cast<std::size_t>(k),
                                      options.reduce_shared_pairs, cert.stats);
    std::vector<ReesElement> elements;
    elements.reserve(relations.size());
    for (const auto& r : relations) {
      check_membership(r.element, ideal, cert.stats);
      elements.push_back(r.element);
    }
    const auto forms = reduce_all(elements, basis, options.threads);
    cert.stats.relations += relations.size();

    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < forms.size(); ++i) {
      if (forms[i].is_zero()) continue;
      ++cert.stats.nonzero;
      if (!best || elements[i].x_degree() < elements[*best].x_degree()) best = i;
    }
    if (best) {
      cert.verdict = Verdict::NotLinearType;
      cert.witness = Witness{elements[*best], relations[*best].alpha, relations[*best].beta, forms[*best]};
      return cert;
    }
  }
  return cert;
}

Certificate combine_components(std::span<const Certificate> certificates) {
  Certificate out;
  if (certificates.empty()) return out;
  out.max_degree = certificates.front().max_degree;
  out.components = 0;
  for (const auto& c : certificates) {
    out.components += c.components;
    out.groebner_basis_size += c.groebner_basis_size;
    out.max_degree = std::min(out.max_degree, c.max_degree);
    auto& s = out.stats;
    s.relations += c.stats.relations;
    s.shared_index_skipped += c.stats.shared_index_skipped;
    s.coincidences += c.stats.coincidences;
    s.nonzero += c.stats.nonzero;
    s.substitution_checks += c.stats.substitution_checks;
    s.groebner.pairs_considered += c.stats.groebner.pairs_considered;
    s.groebner.pairs_reduced += c.stats.groebner.pairs_reduced;
    s.groebner.pairs_pruned += c.stats.groebner.pairs_pruned;
    s.groebner.pairs_deferred += c.stats.groebner.pairs_deferred;
    s.groebner.reductions_to_zero += c.stats.groebner.reductions_to_zero;
    if (c.verdict == Verdict::NotLinearType && out.verdict != Verdict::NotLinearType) {
      out.verdict = Verdict::NotLinearType;
      out.witness = c.witness;
    }
  }
  return out;
}

Certificate verify_linear_type(const SquarefreeIdeal& ideal, int max_degree,
                               const VerifyOptions& options) {
  check_degree(max_degree);
  const auto parts = connected_components(from_ideal(ideal));
  std::vector<Certificate> certs;
  certs.reserve(parts.size());
  for (const auto& part : parts) {
    certs.push_back(verify_component(ideal, part.facet_indices, max_degree, options));
  }
  return combine_components(certs);
}

PresentationReport verify_presentation(const SquarefreeIdeal& ideal,
                                       const std::vector<ReesElement>& extra, int max_degree,
                                       const VerifyOptions& options) {
  check_degree(max_degree);
  const TermOrder order = term_order_for(ideal);
  int cap = max_degree + 1;
  for (const auto& e : extra) {
    for (const auto& t : e.terms()) order.compare(t.mono, t.mono);
    if (!vanishes_under_substitution(e, ideal)) {
      throw Error(ErrorCode::NotInJ, e.to_string() + " does not vanish under T_i -> f_i t");
    }
    cap = std::max(cap, e.t_degree());
  }

  std::vector<ReesElement> gens = extra;
  if (ideal.size() >= 2) {
    for (auto& l : linear_relations(ideal)) gens.push_back(std::move(l.element));
  }
  const GroebnerBasis basis = buchberger(gens, order, cap, options.budget);

  PresentationReport report;
  report.max_degree = max_degree;
  report.groebner_basis_size = basis.elements.size();
  ReductionStats ignored;
  for (int k = 2; k <= max_degree && report.all_reduce; ++k) {
    auto relations = degree_relations(ideal, {}, static_cast<std::size_t>(k),
                                      options.reduce_shared_pairs, ignored);
    std::vector<ReesElement> elements;
    for (const auto& r : relations) elements.push_back(r.element);
    const auto forms = reduce_all(elements, basis, options.threads);
    report.checked += relations.size();
    for (std::size_t i = 0; i < forms.size(); ++i) {
      if (!forms[i].is_zero()) {
        report.all_reduce = false;
        report.first_failure = Witness{elements[i], relations[i].alpha, relations[i].beta, forms[i]};
        break;
      }
    }
  }
  return report;
}

}  // namespace montype
