#include "montype/rees.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>

#include "montype/error.hpp"

namespace montype {

namespace {

std::uint16_t checked_exponent(long e) {
  if (e < 0 || e > std::numeric_limits<std::uint16_t>::max()) {
    throw Error(ErrorCode::Overflow, "exponent " + std::to_string(e) + " out of range");
  }
  return static_cast<std::uint16_t>(e);
}

}  // namespace

ReesMonomial ReesMonomial::make(const Monomial& x, const std::vector<int>& t, std::size_t s) {
  if (t.size() > s) throw Error(ErrorCode::IndexOutOfRange, "too many T exponents");
  ReesMonomial m(x.ambient(), s);
  for (const auto& [v, e] : x.entries()) m.set_x(v, e);
  for (std::size_t i = 0; i < t.size(); ++i) m.set_t(i, t[i]);
  return m;
}

void ReesMonomial::set_x(Var v, int e) {
  if (v < 1 || v > ambient()) throw Error(ErrorCode::IndexOutOfRange, "x" + std::to_string(v));
  e_[e_.size() - v] = checked_exponent(e);
}

void ReesMonomial::set_t(std::size_t i, int e) {
  if (i >= s_) throw Error(ErrorCode::IndexOutOfRange, "T" + std::to_string(i + 1));
  e_[s_ - 1 - i] = checked_exponent(e);
}

int ReesMonomial::t_degree() const noexcept {
  int d = 0;
  for (std::size_t i = 0; i < s_; ++i) d += e_[i];
  return d;
}

int ReesMonomial::x_degree() const noexcept {
  int d = 0;
  for (std::size_t i = s_; i < e_.size(); ++i) d += e_[i];
  return d;
}

bool ReesMonomial::is_one() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](std::uint16_t e) { return e == 0; });
}

Monomial ReesMonomial::x_part() const {
  std::vector<Monomial::Entry> entries;
  for (Var v = 1; v <= ambient(); ++v) {
    if (x(v)) entries.emplace_back(v, x(v));
  }
  return Monomial(ambient(), std::move(entries));
}

std::vector<int> ReesMonomial::t_part() const {
  std::vector<int> t(s_);
  for (std::size_t i = 0; i < s_; ++i) t[i] = this->t(i);
  return t;
}

bool ReesMonomial::divides(const ReesMonomial& other) const noexcept {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

bool ReesMonomial::coprime(const ReesMonomial& other) const noexcept {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] && other.e_[i]) return false;
  }
  return true;
}

ReesMonomial ReesMonomial::operator*(const ReesMonomial& other) const {
  ReesMonomial out = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    out.e_[i] = checked_exponent(long{e_[i]} + other.e_[i]);
  }
  return out;
}

ReesMonomial ReesMonomial::quotient(const ReesMonomial& divisor) const {
  if (!divisor.divides(*this)) {
    throw Error(ErrorCode::PreconditionViolated, divisor.to_string() + " does not divide " + to_string());
  }
  ReesMonomial out = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - divisor.e_[i];
  return out;
}

ReesMonomial lcm(const ReesMonomial& a, const ReesMonomial& b) {
  ReesMonomial out = a;
  for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = std::max(a.e_[i], b.e_[i]);
  return out;
}

std::string ReesMonomial::to_string() const {
  std::string s;
  auto put = [&s](char letter, std::size_t index, int e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += letter;
    s += std::to_string(index);
    if (e > 1) s += '^' + std::to_string(e);
  };
  for (Var v = 1; v <= ambient(); ++v) put('x', static_cast<std::size_t>(v), x(v));
  for (std::size_t i = 0; i < s_; ++i) put('T', i + 1, t(i));
  return s.empty() ? "1" : s;
}

std::strong_ordering TermOrder::compare(const ReesMonomial& a, const ReesMonomial& b) const {
  if (a.ambient() != n || b.ambient() != n || a.generators() != s || b.generators() != s) {
    throw Error(ErrorCode::AmbientMismatch, "term from a different ring");
  }
  return a <=> b;
}

ReesElement::ReesElement(std::vector<ReesTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const ReesTerm& a, const ReesTerm& b) { return a.mono > b.mono; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

ReesElement ReesElement::binomial(const ReesMonomial& a, const ReesMonomial& b) {
  return ReesElement({{Rational(1), a}, {Rational(-1), b}});
}

int ReesElement::t_degree() const noexcept {
  if (terms_.empty()) return 0;
  const int d = terms_.front().mono.t_degree();
  for (const auto& t : terms_) {
    if (t.mono.t_degree() != d) return -1;
  }
  return d;
}

int ReesElement::x_degree() const noexcept {
  int d = 0;
  for (const auto& t : terms_) d += t.mono.x_degree();
  return d;
}

bool ReesElement::unit_coefficients() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const ReesTerm& t) {
    return t.coeff.den() == 1 && (t.coeff.num() == 1 || t.coeff.num() == -1);
  });
}

ReesElement ReesElement::monic() const {
  if (terms_.empty() || terms_.front().coeff.is_one()) return *this;
  ReesElement out = *this;
  const Rational lc = terms_.front().coeff;
  for (auto& t : out.terms_) t.coeff /= lc;
  return out;
}

ReesElement ReesElement::operator-() const {
  ReesElement out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

ReesElement ReesElement::minus_multiple(const Rational& c, const ReesMonomial& m,
                                        const ReesElement& other) const {
  ReesElement out;
  out.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end()) {
      out.terms_.push_back(*a++);
      continue;
    }
    ReesMonomial bm = b->mono * m;
    if (a == terms_.end() || bm > a->mono) {
      out.terms_.push_back({-(c * b->coeff), std::move(bm)});
      ++b;
    } else if (bm == a->mono) {
      Rational coeff = a->coeff - c * b->coeff;
      if (!coeff.is_zero()) out.terms_.push_back({coeff, a->mono});
      ++a;
      ++b;
    } else {
      out.terms_.push_back(*a++);
    }
  }
  return out;
}

ReesElement ReesElement::times(const Rational& c, const ReesMonomial& m) const {
  if (c.is_zero()) return {};
  ReesElement out = *this;
  for (auto& t : out.terms_) {
    t.coeff *= c;
    t.mono = t.mono * m;
  }
  return out;
}

ReesElement operator+(const ReesElement& a, const ReesElement& b) {
  if (b.is_zero()) return a;
  return a.minus_multiple(Rational(-1), ReesMonomial(b.lead().mono.ambient(), b.lead().mono.generators()), b);
}

ReesElement operator-(const ReesElement& a, const ReesElement& b) {
  if (b.is_zero()) return a;
  return a.minus_multiple(Rational(1), ReesMonomial(b.lead().mono.ambient(), b.lead().mono.generators()), b);
}

std::string ReesElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += ' ';
    const bool negative = t.coeff < Rational(0);
    s += negative ? '-' : '+';
    const Rational abs = negative ? -t.coeff : t.coeff;
    if (t.mono.is_one()) {
      s += abs.to_string();
    } else {
      if (!abs.is_one()) s += abs.to_string() + '*';
      s += t.mono.to_string();
    }
  }
  return s;
}

ReesElement parse_rees_element(std::string_view text, int n, std::size_t s) {
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::ParseError, why + " in '" + std::string(text) + "'");
  };
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  auto number = [&](std::string_view v) {
    long value = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
    if (ec != std::errc() || p != v.data() + v.size() || v.empty()) throw fail("bad number '" + std::string(v) + "'");
    return value;
  };

  text = trim(text);
  if (text == "0") return {};
  std::vector<ReesTerm> terms;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char sign = text[pos];
    if (sign != '+' && sign != '-') throw fail("expected a sign");
    std::size_t end = pos + 1;
    while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
    const std::string_view body = trim(text.substr(pos + 1, end - pos - 1));
    pos = end;
    if (body.empty()) throw fail("empty term");

    Rational coeff(1);
    ReesMonomial mono(n, s);
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t stop = body.find('*', start);
      if (stop == std::string_view::npos) stop = body.size();
      const std::string_view factor = trim(body.substr(start, stop - start));
      start = stop + 1;
      if (factor.empty()) throw fail("empty factor");
      if (factor[0] == 'x' || factor[0] == 'T') {
        std::string_view index = factor.substr(1);
        long e = 1;
        if (auto caret = index.find('^'); caret != std::string_view::npos) {
          e = number(index.substr(caret + 1));
          index = index.substr(0, caret);
        }
        const long i = number(index);
        if (factor[0] == 'x') {
          if (i < 1 || i > n) throw fail("variable out of range");
          mono.set_x(static_cast<Var>(i), mono.x(static_cast<Var>(i)) + static_cast<int>(e));
        } else {
          if (i < 1 || static_cast<std::size_t>(i) > s) throw fail("T index out of range");
          const auto t = static_cast<std::size_t>(i - 1);
          mono.set_t(t, mono.t(t) + static_cast<int>(e));
        }
      } else if (auto slash = factor.find('/'); slash != std::string_view::npos) {
        coeff *= Rational(number(factor.substr(0, slash)), number(factor.substr(slash + 1)));
      } else {
        coeff *= Rational(number(factor));
      }
    }
    terms.push_back({sign == '-' ? -coeff : coeff, std::move(mono)});
  }
  return ReesElement(std::move(terms));
}

TermOrder term_order_for(const SquarefreeIdeal& ideal) {
  return TermOrder{ideal.ambient(), ideal.size()};
}

bool vanishes_under_substitution(const ReesElement& e, const SquarefreeIdeal& ideal) {
  std::map<std::pair<std::vector<int>, int>, Rational> image;
  for (const auto& term : e.terms()) {
    std::vector<int> x(ideal.ambient() + 1, 0);
    for (Var v = 1; v <= ideal.ambient(); ++v) x[v] = term.mono.x(v);
    for (std::size_t i = 0; i < ideal.size(); ++i) {
      const int power = term.mono.t(i);
      if (power == 0) continue;
      for (const auto& [v, ex] : ideal[i].entries()) x[v] += ex * power;
    }
    image[{std::move(x), term.mono.t_degree()}] += term.coeff;
  }
  return std::all_of(image.begin(), image.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

namespace {

std::vector<std::size_t> resolve_members(const SquarefreeIdeal& ideal,
                                         const std::vector<std::size_t>& members) {
  if (!members.empty()) {
    for (std::size_t m : members) {
      if (m >= ideal.size()) throw Error(ErrorCode::IndexOutOfRange, "generator " + std::to_string(m + 1));
    }
    return members;
  }
  std::vector<std::size_t> all(ideal.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

ReesMonomial x_times_t(const Monomial& x, const MultiIndex& alpha, std::size_t s) {
  ReesMonomial m = ReesMonomial::make(x, {}, s);
  for (std::size_t i : alpha) m.set_t(i, m.t(i) + 1);
  return m;
}

Monomial product(const SquarefreeIdeal& ideal, const MultiIndex& alpha) {
  Monomial f(ideal.ambient());
  for (std::size_t i : alpha) f = f * ideal[i];
  return f;
}

}  // namespace

std::vector<LinearRelation> linear_relations(const SquarefreeIdeal& ideal,
                                             const std::vector<std::size_t>& members) {
  const auto gens = resolve_members(ideal, members);
  if (gens.size() < 2) throw Error(ErrorCode::PreconditionViolated, "needs at least two generators");
  const std::size_t s = ideal.size();
  std::vector<LinearRelation> out;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      const std::size_t i = std::min(gens[a], gens[b]);
      const std::size_t j = std::max(gens[a], gens[b]);
      const Monomial g = gcd(ideal[i], ideal[j]);
      const ReesMonomial lead = x_times_t(ideal[i].quotient(g), {j}, s);
      ReesElement l = ReesElement::binomial(lead, x_times_t(ideal[j].quotient(g), {i}, s));
      if (l.lead().mono != lead) {
        throw Error(ErrorCode::PreconditionViolated, "term order does not lead with m_ij T_j");
      }
      out.push_back({i, j, std::move(l)});
    }
  }
  return out;
}

std::vector<MultiIndex> multi_indices(const std::vector<std::size_t>& members, std::size_t k) {
  std::vector<MultiIndex> out;
  if (members.empty() || k == 0) return out;
  std::vector<std::size_t> pick(k, 0);  // positions into members, non-decreasing
  while (true) {
    MultiIndex alpha(k);
    for (std::size_t i = 0; i < k; ++i) alpha[i] = members[pick[i]];
    out.push_back(std::move(alpha));
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == members.size() - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[i - 1];
  }
  return out;
}

ReesElement taylor_relation(const SquarefreeIdeal& ideal, const MultiIndex& alpha,
                            const MultiIndex& beta) {
  const Monomial fa = product(ideal, alpha);
  const Monomial fb = product(ideal, beta);
  const Monomial g = gcd(fa, fb);
  return ReesElement::binomial(x_times_t(fb.quotient(g), alpha, ideal.size()),
                               x_times_t(fa.quotient(g), beta, ideal.size()));
}

std::vector<TaylorRelation> taylor_relations(const SquarefreeIdeal& ideal, std::size_t k,
                                             const std::vector<std::size_t>& members,
                                             bool disjoint_only) {
  if (k < 1) throw Error(ErrorCode::PreconditionViolated, "degree must be at least 1");
  std::vector<std::size_t> gens = resolve_members(ideal, members);
  std::sort(gens.begin(), gens.end());
  const auto indices = multi_indices(gens, k);
  std::vector<Monomial> products;
  products.reserve(indices.size());
  for (const auto& a : indices) products.push_back(product(ideal, a));

  std::vector<TaylorRelation> out;
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = a + 1; b < indices.size(); ++b) {
      const MultiIndex& alpha = indices[a];
      const MultiIndex& beta = indices[b];
      if (disjoint_only) {
        std::vector<std::size_t> shared;
        std::set_intersection(alpha.begin(), alpha.end(), beta.begin(), beta.end(),
                              std::back_inserter(shared));
        if (!shared.empty()) continue;
      }
      const Monomial g = gcd(products[a], products[b]);
      ReesElement e = ReesElement::binomial(x_times_t(products[b].quotient(g), alpha, ideal.size()),
                                            x_times_t(products[a].quotient(g), beta, ideal.size()));
      out.push_back({alpha, beta, std::move(e), products[a] == products[b]});
    }
  }
  return out;
}

}  // namespace montype
