#include "montype/monomial.hpp"

#include <algorithm>

#include "montype/error.hpp"

namespace montype {

namespace {

void require_same_ambient(const Monomial& a, const Monomial& b) {
  if (a.ambient() != b.ambient()) {
    throw Error(ErrorCode::AmbientMismatch,
                "monomials over " + std::to_string(a.ambient()) + " and " +
                    std::to_string(b.ambient()) + " variables");
  }
}

template <typename Combine>
Monomial merge(const Monomial& a, const Monomial& b, Combine combine) {
  require_same_ambient(a, b);
  std::vector<Monomial::Entry> out;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    Var v;
    int x = 0, y = 0;
    if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
      v = ea[i].first;
      x = ea[i++].second;
    } else if (i == ea.size() || eb[j].first < ea[i].first) {
      v = eb[j].first;
      y = eb[j++].second;
    } else {
      v = ea[i].first;
      x = ea[i++].second;
      y = eb[j++].second;
    }
    if (int e = combine(x, y); e > 0) out.emplace_back(v, e);
  }
  return Monomial(a.ambient(), std::move(out));
}

}  // namespace

Monomial::Monomial(int ambient, std::vector<Entry> entries)
    : ambient_(ambient), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  std::vector<Entry> merged;
  for (const auto& [v, e] : entries_) {
    if (v < 1 || v > ambient_) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "variable x" + std::to_string(v) + " outside ambient " +
                      std::to_string(ambient_));
    }
    if (e < 0) throw Error(ErrorCode::IndexOutOfRange, "negative exponent");
    if (e == 0) continue;
    if (!merged.empty() && merged.back().first == v) {
      merged.back().second += e;
    } else {
      merged.emplace_back(v, e);
    }
  }
  entries_ = std::move(merged);
}

Monomial Monomial::from_support(int ambient, std::span<const Var> vars) {
  std::vector<Entry> entries;
  entries.reserve(vars.size());
  for (Var v : vars) entries.emplace_back(v, 1);
  return Monomial(ambient, std::move(entries));
}

int Monomial::exponent(Var v) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{v, 0});
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

int Monomial::degree() const noexcept {
  int d = 0;
  for (const auto& e : entries_) d += e.second;
  return d;
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.second == 1; });
}

std::vector<Var> Monomial::support() const {
  std::vector<Var> vars;
  vars.reserve(entries_.size());
  for (const auto& e : entries_) vars.push_back(e.first);
  return vars;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ambient(*this, other);
  return std::all_of(entries_.begin(), entries_.end(), [&](const Entry& e) {
    return other.exponent(e.first) >= e.second;
  });
}

Monomial Monomial::operator*(const Monomial& other) const {
  return merge(*this, other, [](int x, int y) { return x + y; });
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this)) {
    throw Error(ErrorCode::PreconditionViolated,
                divisor.to_string() + " does not divide " + to_string());
  }
  return merge(*this, divisor, [](int x, int y) { return x - y; });
}

Monomial Monomial::without(Var v) const {
  Monomial m = *this;
  std::erase_if(m.entries_, [v](const Entry& e) { return e.first == v; });
  return m;
}

std::string Monomial::to_string() const {
  if (entries_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : entries_) {
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(v);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  return merge(a, b, [](int x, int y) { return std::min(x, y); });
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  return merge(a, b, [](int x, int y) { return std::max(x, y); });
}

std::pair<Monomial, Monomial> gcd_lcm(const Monomial& a, const Monomial& b) {
  return {gcd(a, b), lcm(a, b)};
}

bool lex_greater(const Monomial& a, const Monomial& b) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0;
  for (; i < ea.size() && i < eb.size(); ++i) {
    if (ea[i].first != eb[i].first) return ea[i].first < eb[i].first;
    if (ea[i].second != eb[i].second) return ea[i].second > eb[i].second;
  }
  return i < ea.size() && i == eb.size();
}

}  // namespace montype
