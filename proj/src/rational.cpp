#include "montype/rational.hpp"

#include <numeric>
#include <ostream>

#include "montype/error.hpp"

namespace montype {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquarefreeInput: return "NonSquarefreeInput";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::UnitGenerator: return "UnitGenerator";
    case ErrorCode::NotAClutter: return "NotAClutter";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DegenerateCore: return "DegenerateCore";
    case ErrorCode::NotLinearCycle: return "NotLinearCycle";
    case ErrorCode::ConeNotStripped: return "ConeNotStripped";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::MinimalityViolated: return "MinimalityViolated";
    case ErrorCode::CapTooSmall: return "CapTooSmall";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::NotInJ: return "NotInJ";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::GenerationFailure: return "GenerationFailure";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "rational multiplication");
  }
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "rational addition");
  }
  return r;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den == 0) throw Error(ErrorCode::Overflow, "zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = checked_mul(num_, -1);
    den_ = checked_mul(den_, -1);
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = checked_mul(r.num_, -1);
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    num_ = checked_add(num_, o.num_);
  } else {
    const std::int64_t g = std::gcd(den_, o.den_);
    const std::int64_t l = checked_mul(den_ / g, o.den_);
    num_ = checked_add(checked_mul(num_, l / den_), checked_mul(o.num_, l / o.den_));
    den_ = l;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  const std::int64_t g1 = std::gcd(num_, o.den_);
  const std::int64_t g2 = std::gcd(o.num_, den_);
  const std::int64_t a = g1 ? num_ / g1 : num_;
  const std::int64_t d = g1 ? o.den_ / g1 : o.den_;
  const std::int64_t c = g2 ? o.num_ / g2 : o.num_;
  const std::int64_t b = g2 ? den_ / g2 : den_;
  num_ = checked_mul(a, c);
  den_ = checked_mul(b, d);
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw Error(ErrorCode::Overflow, "division by zero");
  return *this *= Rational(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __extension__ using Wide = __int128;
  const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace montype
