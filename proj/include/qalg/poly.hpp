#pragma once

// Univariate polynomials over a Field, lowest coefficient first. Used for minimal polynomials
// of algebra elements and for finding their roots in the base field.

#include <boost/integer/common_factor.hpp>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qalg/field.hpp"

namespace qalg {

using Poly = std::vector<Scalar>;

namespace poly {

inline void trim(Poly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline Poly monic(Poly a) {
  trim(a);
  if (a.empty()) return a;
  Scalar inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return a;
}

inline Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), b.back().field().zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, a[0].field().zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

inline std::pair<Poly, Poly> divmod(Poly a, Poly b) {
  trim(a);
  trim(b);
  if (b.empty()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  const Field f = b.back().field();
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, f.zero());
  Scalar lead_inv = b.back().inverse();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    Scalar c = a[i] * lead_inv;
    q[i - (b.size() - 1)] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[i - (b.size() - 1) + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

inline Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// s with s*a = g (mod m) where g = gcd(a, m); used to invert a modulo a coprime m.
inline Poly inverse_mod(const Poly& a, const Poly& m) {
  const Field f = m.back().field();
  Poly r0 = m, r1 = mod(a, m);
  Poly s0{}, s1{f.one()};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) fail(ErrorCode::NotInvertible, "polynomial is not invertible modulo the modulus");
  Scalar inv = r0[0].inverse();
  for (auto& c : s0) c *= inv;
  return mod(s0, m);
}

inline Scalar eval(const Poly& a, const Scalar& x) {
  Scalar acc = x.field().zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
  return acc;
}

inline Poly linear(const Scalar& root) { return {-root, root.field().one()}; }

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
  const Field f = m.back().field();
  Poly result{f.one()};
  base = mod(base, m);
  while (e) {
    if (e & 1) result = mod(mul(result, base), m);
    e >>= 1;
    if (e) base = mod(mul(base, base), m);
  }
  return result;
}

namespace detail {

inline std::vector<Integer> divisors_of(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  if (n == 0 || n > Integer(1000000000000LL)) return out;
  for (Integer d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

inline std::vector<Scalar> rational_roots(const Poly& a, const Field& f) {
  // clear denominators, then apply the rational root test
  Integer lcm = 1;
  for (const auto& c : a) {
    auto r = c.as_rational();
    if (!r) return {};
    lcm = boost::integer::lcm(lcm, boost::multiprecision::denominator(*r));
  }
  std::vector<Integer> ints;
  for (const auto& c : a) {
    Rational v = *c.as_rational() * lcm;
    ints.push_back(boost::multiprecision::numerator(v));
  }
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  std::vector<Scalar> roots;
  if (low > 0) roots.push_back(f.zero());
  if (low + 1 >= ints.size()) return roots;
  for (const auto& p : divisors_of(ints[low]))
    for (const auto& q : divisors_of(ints.back()))
      for (int sign : {1, -1}) {
        Scalar cand = f.from_rational(Rational(p * sign, q));
        if (eval(a, cand).is_zero() &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  return roots;
}

inline void split_prime(const Poly& g, std::uint64_t p, std::mt19937_64& rng, std::vector<Scalar>& out) {
  const Field f = g.back().field();
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(-g[0] * g[1].inverse());
    return;
  }
  for (int attempt = 0; attempt < 200; ++attempt) {
    Scalar a = f.from_int(static_cast<std::int64_t>(rng() % p));
    Poly h = powmod(Poly{a, f.one()}, (p - 1) / 2, g);
    Poly d = gcd(g, sub(h, Poly{f.one()}));
    if (d.size() > 1 && d.size() < g.size()) {
      split_prime(d, p, rng, out);
      split_prime(divmod(g, d).first, p, rng, out);
      return;
    }
  }
}

}  // namespace detail

// Distinct roots of a nonzero polynomial that lie in its coefficient field. Complete over Q and F_p;
// over Q(zeta_n) only 0, the roots of unity +-zeta^k and rational roots are tried.
inline std::vector<Scalar> roots(Poly a) {
  trim(a);
  if (a.size() <= 1) return {};
  const Field f = a.back().field();
  switch (f.kind()) {
    case FieldKind::Rationals: return detail::rational_roots(a, f);
    case FieldKind::Prime: {
      const std::uint64_t p = f.characteristic();
      std::vector<Scalar> out;
      if (p == 2) {
        for (int v : {0, 1})
          if (eval(a, f.from_int(v)).is_zero()) out.push_back(f.from_int(v));
        return out;
      }
      // product of the distinct linear factors
      Poly x{f.zero(), f.one()};
      Poly g = gcd(a, sub(powmod(x, p, monic(a)), x));
      if (!g.empty() && g[0].is_zero()) {
        out.push_back(f.zero());
        g = divmod(g, x).first;
      }
      std::mt19937_64 rng(p);
      detail::split_prime(monic(g), p, rng, out);
      return out;
    }
    case FieldKind::Cyclotomic: {
      std::vector<Scalar> cands{f.zero()};
      Scalar z = f.generator();
      const std::uint64_t n = f.descriptor().param;
      for (std::uint64_t k = 0; k < n; ++k) {
        cands.push_back(z.pow(k));
        cands.push_back(-z.pow(k));
      }
      bool rational = true;
      for (const auto& c : a) rational = rational && c.as_rational().has_value();
      if (rational)
        for (auto& r : detail::rational_roots(a, f)) cands.push_back(r);
      std::vector<Scalar> out;
      for (auto& c : cands)
        if (eval(a, c).is_zero() && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
      return out;
    }
  }
  return {};
}

}  // namespace poly
}  // namespace qalg
