#pragma once

// Exact scalars over Q, the cyclotomic fields Q(zeta_n) and prime fields F_p.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qalg/error.hpp"

namespace qalg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, Cyclotomic, Prime };

struct FieldDescriptor {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t param = 0;  // n for Q(zeta_n), p for F_p, unused for Q

  static FieldDescriptor rationals() { return {}; }
  static FieldDescriptor cyclotomic(std::uint64_t n);
  static FieldDescriptor prime(std::uint64_t p);
  static FieldDescriptor parse(std::string_view text);

  std::uint64_t characteristic() const { return kind == FieldKind::Prime ? param : 0; }
  std::string to_string() const;

  auto operator<=>(const FieldDescriptor&) const = default;
};

namespace detail {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Integer polynomials, coefficient i of x^i.
using IntPoly = std::vector<Integer>;

// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
inline IntPoly cyclotomic_polynomial(std::uint64_t n) {
  static std::mutex mu;
  static std::map<std::uint64_t, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint64_t d : divisors(n)) {
    if (d == n) continue;
    IntPoly den = cyclotomic_polynomial(d);
    // exact division by a monic polynomial
    std::size_t dd = den.size() - 1;
    IntPoly quot(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
      Integer c = num[k];
      quot[k - dd] = c;
      if (c == 0) continue;
      for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
    }
    num = std::move(quot);
  }
  std::lock_guard lock(mu);
  cache.emplace(n, num);
  return num;
}

struct FieldContext {
  FieldDescriptor descriptor;
  std::size_t degree = 1;     // phi(n) for cyclotomic fields
  IntPoly modulus;            // monic Phi_n
  std::uint64_t exponent = 0; // lcm(2, n): every root of unity in Q(zeta_n) has order dividing it
};

inline const FieldContext* intern(const FieldDescriptor& d) {
  static std::mutex mu;
  static std::map<FieldDescriptor, std::unique_ptr<FieldContext>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[d];
  if (!slot) {
    slot = std::make_unique<FieldContext>();
    slot->descriptor = d;
    if (d.kind == FieldKind::Cyclotomic) {
      slot->modulus = cyclotomic_polynomial(d.param);
      slot->degree = slot->modulus.size() - 1;
      slot->exponent = std::lcm<std::uint64_t>(2, d.param);
    }
  }
  return slot.get();
}

}  // namespace detail

inline FieldDescriptor FieldDescriptor::cyclotomic(std::uint64_t n) {
  if (n < 3) fail(ErrorCode::InvalidField, "cyclotomic order must be at least 3, got " + std::to_string(n));
  if (n > 1000) fail(ErrorCode::InvalidField, "cyclotomic order too large: " + std::to_string(n));
  return {FieldKind::Cyclotomic, n};
}

inline FieldDescriptor FieldDescriptor::prime(std::uint64_t p) {
  if (!detail::is_prime(p)) fail(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 31)) fail(ErrorCode::InvalidField, "prime too large: " + std::to_string(p));
  return {FieldKind::Prime, p};
}

inline std::string FieldDescriptor::to_string() const {
  switch (kind) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::Cyclotomic: return "Q(z" + std::to_string(param) + ")";
    case FieldKind::Prime: return "F" + std::to_string(param);
  }
  return "?";
}

inline FieldDescriptor FieldDescriptor::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto number = [&](std::string_view digits) -> std::uint64_t {
    if (digits.empty() || digits.size() > 12 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail(ErrorCode::InvalidField, "bad field descriptor '" + std::string(text) + "'");
    return std::stoull(std::string(digits));
  };
  if (s == "Q" || s == "QQ") return rationals();
  std::string_view v = s;
  if (v.starts_with("GF(") && v.ends_with(")")) return prime(number(v.substr(3, v.size() - 4)));
  if (v.starts_with("F")) return prime(number(v.substr(1)));
  for (std::string_view prefix : {"Q(zeta", "Q(z"}) {
    if (v.starts_with(prefix) && v.ends_with(")"))
      return cyclotomic(number(v.substr(prefix.size(), v.size() - prefix.size() - 1)));
  }
  fail(ErrorCode::InvalidField, "bad field descriptor '" + std::string(text) + "'");
}

class Scalar;

// Cheap handle to an interned field; equality is identity of the field.
class Field {
 public:
  Field() : ctx_(rationals_context()) {}
  explicit Field(const FieldDescriptor& d) : ctx_(detail::intern(d)) {}

  const FieldDescriptor& descriptor() const { return ctx_->descriptor; }
  FieldKind kind() const { return ctx_->descriptor.kind; }
  std::uint64_t characteristic() const { return ctx_->descriptor.characteristic(); }
  std::string to_string() const { return ctx_->descriptor.to_string(); }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_rational(const Rational& q) const;
  // zeta_n in Q(zeta_n)
  Scalar generator() const;

  bool operator==(const Field& o) const { return ctx_ == o.ctx_; }

  const detail::FieldContext* context() const { return ctx_; }

 private:
  friend class Scalar;
  explicit Field(const detail::FieldContext* ctx) : ctx_(ctx) {}

  static const detail::FieldContext* rationals_context() {
    static const detail::FieldContext* q = detail::intern(FieldDescriptor::rationals());
    return q;
  }

  const detail::FieldContext* ctx_;
};

class Scalar {
 public:
  using Cyclo = std::vector<Rational>;

  Scalar() : ctx_(Field().context()), value_(Rational(0)) {}

  Field field() const { return field_of(ctx_); }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const { return ctx_ == o.ctx_ && value_ == o.value_; }

  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  // Canonical text form; parse_scalar(to_string()) reproduces the value.
  std::string to_string() const;

  // Rational value, only meaningful over Q (or a rational element of Q(zeta_n)).
  std::optional<Rational> as_rational() const;
  std::int64_t residue() const { return std::get<std::int64_t>(value_); }
  const Cyclo& cyclo() const { return std::get<Cyclo>(value_); }

 private:
  friend class Field;
  friend Scalar make_cyclo(const detail::FieldContext*, Cyclo);
  using Value = std::variant<Rational, std::int64_t, Cyclo>;

  Scalar(const detail::FieldContext* ctx, Value v) : ctx_(ctx), value_(std::move(v)) {}

  static Field field_of(const detail::FieldContext* ctx) { return Field(ctx); }
  void check_same(const Scalar& o) const {
    if (ctx_ != o.ctx_)
      fail(ErrorCode::FieldMismatch, "cannot combine scalars of " + ctx_->descriptor.to_string() + " and " +
                                         o.ctx_->descriptor.to_string());
  }
  std::uint64_t p() const { return ctx_->descriptor.param; }

  const detail::FieldContext* ctx_;
  Value value_;
};

namespace detail {

using RatPoly = std::vector<Rational>;

inline void trim(RatPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline void reduce_mod(RatPoly& a, const IntPoly& m) {
  std::size_t d = m.size() - 1;
  for (std::size_t k = a.size(); k-- > d;) {
    Rational c = a[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= d; ++i) a[k - d + i] -= c * Rational(m[i]);
  }
  a.resize(d, Rational(0));
}

// returns (q, r) with a = q*b + r
inline std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  return {q, a};
}

inline RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline std::int64_t mod_pow(std::int64_t b, std::uint64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::int64_t reduce_integer(const Integer& v, std::uint64_t p) {
  Integer r = v % Integer(p);
  if (r < 0) r += Integer(p);
  return static_cast<std::int64_t>(r);
}

}  // namespace detail

inline Scalar make_cyclo(const detail::FieldContext* ctx, Scalar::Cyclo c) {
  c.resize(ctx->degree, Rational(0));
  return Scalar(ctx, std::move(c));
}

inline Scalar Field::zero() const { return from_int(0); }
inline Scalar Field::one() const { return from_int(1); }

inline Scalar Field::from_rational(const Rational& q) const {
  switch (kind()) {
    case FieldKind::Rationals: return Scalar(ctx_, q);
    case FieldKind::Cyclotomic: {
      Scalar::Cyclo c(ctx_->degree, Rational(0));
      c[0] = q;
      return Scalar(ctx_, std::move(c));
    }
    case FieldKind::Prime: {
      std::uint64_t p = characteristic();
      std::int64_t den = detail::reduce_integer(boost::multiprecision::denominator(q), p);
      if (den == 0) fail(ErrorCode::ZeroDenominator, "denominator divisible by " + std::to_string(p));
      std::int64_t num = detail::reduce_integer(boost::multiprecision::numerator(q), p);
      std::int64_t inv = detail::mod_pow(den, p - 2, static_cast<std::int64_t>(p));
      return Scalar(ctx_, num * inv % static_cast<std::int64_t>(p));
    }
  }
  return Scalar();
}

inline Scalar Field::from_int(std::int64_t v) const { return from_rational(Rational(v)); }

inline Scalar Field::generator() const {
  if (kind() != FieldKind::Cyclotomic) fail(ErrorCode::WrongField, "z is only defined in a cyclotomic field");
  Scalar::Cyclo c(ctx_->degree + 1, Rational(0));
  c[1] = 1;
  detail::reduce_mod(c, ctx_->modulus);
  return make_cyclo(ctx_, std::move(c));
}

inline bool Scalar::is_zero() const {
  switch (value_.index()) {
    case 0: return std::get<0>(value_) == 0;
    case 1: return std::get<1>(value_) == 0;
    default:
      for (const auto& c : std::get<2>(value_))
        if (c != 0) return false;
      return true;
  }
}

inline bool Scalar::is_one() const { return *this == field().one(); }

inline Scalar Scalar::operator-() const {
  switch (value_.index()) {
    case 0: return Scalar(ctx_, Rational(-std::get<0>(value_)));
    case 1: {
      std::int64_t r = std::get<1>(value_);
      return Scalar(ctx_, r == 0 ? 0 : static_cast<std::int64_t>(p()) - r);
    }
    default: {
      Cyclo c = std::get<2>(value_);
      for (auto& x : c) x = -x;
      return Scalar(ctx_, std::move(c));
    }
  }
}

inline Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  switch (value_.index()) {
    case 0: std::get<0>(value_) += std::get<0>(o.value_); break;
    case 1: {
      auto& r = std::get<1>(value_);
      r += std::get<1>(o.value_);
      if (r >= static_cast<std::int64_t>(p())) r -= static_cast<std::int64_t>(p());
      break;
    }
    default: {
      auto& c = std::get<2>(value_);
      const auto& d = std::get<2>(o.value_);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += d[i];
    }
  }
  return *this;
}

inline Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

inline Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  switch (value_.index()) {
    case 0: std::get<0>(value_) *= std::get<0>(o.value_); break;
    case 1: std::get<1>(value_) = std::get<1>(value_) * std::get<1>(o.value_) % static_cast<std::int64_t>(p()); break;
    default: {
      const auto& a = std::get<2>(value_);
      const auto& b = std::get<2>(o.value_);
      detail::RatPoly prod(2 * a.size() - 1, Rational(0));
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
          if (b[j] != 0) prod[i + j] += a[i] * b[j];
      }
      detail::reduce_mod(prod, ctx_->modulus);
      value_ = std::move(prod);
    }
  }
  return *this;
}

inline Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  switch (value_.index()) {
    case 0: return Scalar(ctx_, Rational(1) / std::get<0>(value_));
    case 1:
      return Scalar(ctx_, detail::mod_pow(std::get<1>(value_), p() - 2, static_cast<std::int64_t>(p())));
    default: {
      // extended Euclid against Phi_n, tracking the cofactor of a only
      detail::RatPoly r0(ctx_->modulus.begin(), ctx_->modulus.end());
      detail::RatPoly r1 = std::get<2>(value_);
      detail::trim(r1);
      detail::RatPoly s0, s1{Rational(1)};
      while (!r1.empty()) {
        auto [q, r] = detail::divmod(r0, r1);
        detail::RatPoly s = detail::poly_sub(s0, detail::poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
      }
      // r0 is a nonzero constant because Phi_n is irreducible
      Rational g = r0[0];
      for (auto& c : s0) c /= g;
      if (s0.size() > ctx_->degree) detail::reduce_mod(s0, ctx_->modulus);
      return make_cyclo(ctx_, std::move(s0));
    }
  }
}

inline Scalar Scalar::pow(std::uint64_t e) const {
  Scalar result = field().one();
  Scalar base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

inline std::optional<Rational> Scalar::as_rational() const {
  switch (value_.index()) {
    case 0: return std::get<0>(value_);
    case 1: return Rational(std::get<1>(value_));
    default: {
      const auto& c = std::get<2>(value_);
      for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return std::nullopt;
      return c[0];
    }
  }
}

inline std::string Scalar::to_string() const {
  switch (value_.index()) {
    case 0: return std::get<0>(value_).str();
    case 1: return std::to_string(std::get<1>(value_));
    default: {
      const auto& c = std::get<2>(value_);
      std::string out;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        bool neg = c[k] < 0;
        Rational mag = neg ? Rational(-c[k]) : c[k];
        if (!out.empty()) out += neg ? "-" : "+";
        else if (neg) out += "-";
        if (k == 0) {
          out += mag.str();
          continue;
        }
        if (mag != 1) out += mag.str() + "*";
        out += k == 1 ? std::string("z") : "z^" + std::to_string(k);
      }
      return out.empty() ? "0" : out;
    }
  }
}

namespace detail {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, Field field) : text_(text), field_(field) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  Scalar parse() {
    if (s_.empty()) malformed();
    Scalar total = field_.zero();
    bool first = true;
    while (pos_ < s_.size() || first) {
      bool neg = false;
      if (peek() == '+' || peek() == '-') {
        neg = peek() == '-';
        ++pos_;
      } else if (!first) {
        malformed();
      }
      Scalar term = parse_term();
      total += neg ? -term : term;
      if (first && field_.kind() != FieldKind::Cyclotomic && pos_ < s_.size()) malformed();
      first = false;
    }
    return total;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  [[noreturn]] void malformed() const {
    fail(ErrorCode::MalformedScalar, "cannot parse '" + std::string(text_) + "' as a scalar of " + field_.to_string());
  }

  Integer digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) malformed();
    return Integer(s_.substr(start, pos_ - start));
  }

  Scalar parse_term() {
    Rational coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = digits();
      Integer den(1);
      if (peek() == '/') {
        ++pos_;
        den = digits();
        if (den == 0) fail(ErrorCode::ZeroDenominator, "zero denominator in '" + std::string(text_) + "'");
      }
      coeff = Rational(num, den);
      have_coeff = true;
      if (peek() == '*') {
        ++pos_;
        if (peek() != 'z') malformed();
      }
    }
    if (peek() == 'z') {
      if (field_.kind() != FieldKind::Cyclotomic)
        fail(ErrorCode::WrongField, "'z' used in '" + std::string(text_) + "' but the field is " + field_.to_string());
      ++pos_;
      std::uint64_t e = 1;
      if (peek() == '^') {
        ++pos_;
        Integer big = digits();
        if (big > 100000) malformed();
        e = static_cast<std::uint64_t>(big);
      }
      return field_.from_rational(coeff) * field_.generator().pow(e);
    }
    if (!have_coeff) malformed();
    return field_.from_rational(coeff);
  }

  std::string_view text_;
  std::string s_;
  std::size_t pos_ = 0;
  Field field_;
};

}  // namespace detail

inline Scalar parse_scalar(std::string_view text, const Field& field) { return detail::ScalarParser(text, field).parse(); }

inline Scalar field_invert(const Scalar& s) { return s.inverse(); }

enum class OrderKind { Finite, ExceedsBound, Infinite };

struct Order {
  OrderKind kind = OrderKind::ExceedsBound;
  std::uint64_t value = 0;  // meaningful when kind == Finite

  static Order finite(std::uint64_t n) { return {OrderKind::Finite, n}; }
  static Order exceeds() { return {OrderKind::ExceedsBound, 0}; }
  static Order infinite() { return {OrderKind::Infinite, 0}; }
  bool is_finite() const { return kind == OrderKind::Finite; }
  std::string to_string() const {
    switch (kind) {
      case OrderKind::Finite: return "Finite(" + std::to_string(value) + ")";
      case OrderKind::ExceedsBound: return "ExceedsBound";
      case OrderKind::Infinite: return "Infinite";
    }
    return "?";
  }
  bool operator==(const Order&) const = default;
};

inline Order multiplicative_order(const Scalar& s, std::uint64_t bound) {
  if (s.is_zero()) fail(ErrorCode::ZeroInput, "order of zero");
  Scalar power = s;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    if (power.is_one()) return Order::finite(n);
    power *= s;
  }
  return Order::exceeds();
}

// Exact decision without a search bound. Returns the order, or nullopt if s is not a root of unity.
inline std::optional<std::uint64_t> is_root_of_unity(const Scalar& s) {
  if (s.is_zero()) fail(ErrorCode::ZeroInput, "root-of-unity test on zero");
  std::uint64_t exponent = 0;
  switch (s.field().kind()) {
    case FieldKind::Rationals: exponent = 2; break;
    case FieldKind::Cyclotomic: exponent = s.field().context()->exponent; break;
    case FieldKind::Prime: exponent = s.field().characteristic() - 1; break;
  }
  if (!s.pow(exponent).is_one()) return std::nullopt;
  for (std::uint64_t d : detail::divisors(exponent))
    if (s.pow(d).is_one()) return d;
  return exponent;
}

}  // namespace qalg
