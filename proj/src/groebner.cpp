#include "montype/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "montype/error.hpp"

namespace montype {

namespace {

const ReesTerm* find_reducible(const ReesElement& p, std::size_t from,
                               const std::vector<const ReesElement*>& basis,
                               const ReesElement** by) {
  for (std::size_t k = from; k < p.terms().size(); ++k) {
    const ReesTerm& t = p.terms()[k];
    for (const ReesElement* g : basis) {
      if (g->lead().mono.divides(t.mono)) {
        *by = g;
        return &t;
      }
    }
  }
  return nullptr;
}

ReesElement reduce(ReesElement p, const std::vector<const ReesElement*>& basis,
                   std::size_t max_terms) {
  // Terms above `done` are already irreducible; the leading part stays put
  // once a term is skipped because later subtractions only touch smaller terms.
  std::size_t done = 0;
  while (true) {
    const ReesElement* g = nullptr;
    const ReesTerm* t = find_reducible(p, done, basis, &g);
    if (!t) return p;
    done = static_cast<std::size_t>(t - p.terms().data());
    const Rational c = t->coeff / g->lead().coeff;
    const ReesMonomial m = t->mono.quotient(g->lead().mono);
    p = p.minus_multiple(c, m, *g);
    if (p.size() > max_terms) {
      throw Error(ErrorCode::ResourceLimit, "polynomial exceeded " + std::to_string(max_terms) + " terms");
    }
  }
}

struct Pair {
  int t_degree;
  ReesMonomial lcm;
  std::size_t i;
  std::size_t j;

  friend bool operator<(const Pair& a, const Pair& b) {
    return std::tie(a.t_degree, a.lcm, a.i, a.j) < std::tie(b.t_degree, b.lcm, b.i, b.j);
  }
};

class Engine {
 public:
  Engine(const TermOrder& order, std::optional<int> cap, const Budget& budget)
      : order_(order), cap_(cap), budget_(budget), start_(std::chrono::steady_clock::now()) {}

  void add(ReesElement h) {
    h = reduce(std::move(h), active(), budget_.max_terms);
    if (h.is_zero()) {
      ++stats_.reductions_to_zero;
      return;
    }
    insert(h.monic());
  }

  void run() {
    while (!pairs_.empty()) {
      check_time();
      const Pair p = *pairs_.begin();
      if (cap_ && p.t_degree > *cap_) {
        stats_.pairs_deferred += pairs_.size();
        pairs_.clear();
        break;
      }
      pairs_.erase(pairs_.begin());
      ++stats_.pairs_reduced;
      const ReesElement& f = basis_[p.i];
      const ReesElement& g = basis_[p.j];
      ReesElement s = f.times(Rational(1), p.lcm.quotient(f.lead().mono))
                          .minus_multiple(Rational(1), p.lcm.quotient(g.lead().mono), g);
      add(std::move(s));
    }
  }

  GroebnerBasis finish() {
    std::vector<std::size_t> live;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (alive_[k]) live.push_back(k);
    }
    GroebnerBasis out;
    out.order = order_;
    out.degree_cap = cap_;
    for (std::size_t k : live) {
      std::vector<const ReesElement*> others;
      for (std::size_t o : live) {
        if (o != k) others.push_back(&basis_[o]);
      }
      // The leading term is not divisible by any other live leading term,
      // so only the tail changes.
      out.elements.push_back(reduce(basis_[k], others, budget_.max_terms).monic());
    }
    std::sort(out.elements.begin(), out.elements.end(), [](const ReesElement& a, const ReesElement& b) {
      return std::make_tuple(a.lead().mono.t_degree(), a.lead().mono) <
             std::make_tuple(b.lead().mono.t_degree(), b.lead().mono);
    });
    out.stats = stats_;
    return out;
  }

 private:
  std::vector<const ReesElement*> active() const {
    std::vector<const ReesElement*> v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (alive_[k]) v.push_back(&basis_[k]);
    }
    return v;
  }

  void check_time() const {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    if (elapsed.count() > budget_.max_seconds) {
      throw Error(ErrorCode::ResourceLimit, "Gröbner computation exceeded the time budget");
    }
  }

  // Gebauer-Möller update for the new element h.
  void insert(ReesElement h) {
    if (basis_.size() + 1 > budget_.max_terms) {
      throw Error(ErrorCode::ResourceLimit, "basis exceeded the size budget");
    }
    const std::size_t hi = basis_.size();
    basis_.push_back(std::move(h));
    alive_.push_back(true);
    const ReesMonomial& lh = basis_[hi].lead().mono;

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!alive_[g]) continue;
      ReesMonomial l = lcm(lh, basis_[g].lead().mono);
      candidates.push_back({l.t_degree(), std::move(l), g, hi});
    }
    stats_.pairs_considered += candidates.size();

    std::vector<Pair> kept;
    while (!candidates.empty()) {
      Pair p = std::move(candidates.back());
      candidates.pop_back();
      const bool coprime = lh.coprime(basis_[p.i].lead().mono);
      auto covers = [&](const Pair& q) { return q.lcm.divides(p.lcm); };
      if (coprime || (std::none_of(candidates.begin(), candidates.end(), covers) &&
                      std::none_of(kept.begin(), kept.end(), covers))) {
        kept.push_back(std::move(p));
      } else {
        ++stats_.pairs_pruned;
      }
    }

    stats_.pairs_pruned += std::erase_if(pairs_, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      return lcm(basis_[p.i].lead().mono, lh) != p.lcm && lcm(basis_[p.j].lead().mono, lh) != p.lcm;
    });

    for (auto& p : kept) {
      if (lh.coprime(basis_[p.i].lead().mono)) {
        ++stats_.pairs_pruned;
      } else {
        pairs_.insert(std::move(p));
      }
    }

    for (std::size_t g = 0; g < hi; ++g) {
      if (alive_[g] && lh.divides(basis_[g].lead().mono)) alive_[g] = false;
    }
  }

  TermOrder order_;
  std::optional<int> cap_;
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::vector<ReesElement> basis_;
  std::vector<bool> alive_;
  std::set<Pair> pairs_;
  GroebnerStats stats_;
};

}  // namespace

GroebnerBasis buchberger(const std::vector<ReesElement>& gens, const TermOrder& order,
                         std::optional<int> degree_cap, const Budget& budget) {
  std::vector<ReesElement> inputs;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    for (const auto& t : g.terms()) order.compare(t.mono, t.mono);  // ring check
    const int d = g.t_degree();
    if (d < 0) throw Error(ErrorCode::NotHomogeneous, g.to_string());
    if (degree_cap && d > *degree_cap) {
      throw Error(ErrorCode::CapTooSmall, "generator of T-degree " + std::to_string(d) +
                                              " above cap " + std::to_string(*degree_cap));
    }
    inputs.push_back(g);
  }
  std::sort(inputs.begin(), inputs.end(), [](const ReesElement& a, const ReesElement& b) {
    return std::make_tuple(a.t_degree(), a.lead().mono) < std::make_tuple(b.t_degree(), b.lead().mono);
  });

  Engine engine(order, degree_cap, budget);
  for (auto& g : inputs) engine.add(std::move(g));
  engine.run();
  return engine.finish();
}

ReesElement normal_form(const ReesElement& e, const std::vector<ReesElement>& basis) {
  std::vector<const ReesElement*> ptrs;
  ptrs.reserve(basis.size());
  for (const auto& b : basis) {
    if (!b.is_zero()) ptrs.push_back(&b);
  }
  return reduce(e, ptrs, Budget{}.max_terms);
}

ReesElement normal_form(const ReesElement& e, const GroebnerBasis& basis) {
  return normal_form(e, basis.elements);
}

}  // namespace montype
