#pragma once

// Dense univariate polynomials over F_q or F_{q^2}.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pglinv/field.hpp"

namespace pglinv {

/// Ascending coefficients; the zero polynomial has no coefficients and the
/// leading coefficient of a nonzero polynomial is nonzero.
template <class E>
class Poly {
 public:
  using elem = E;
  using field_type = typename E::field_type;

  Poly() = default;
  explicit Poly(const field_type& f) : f_(&f) {}
  Poly(const field_type& f, std::vector<E> c) : f_(&f), c_(std::move(c)) {
    for (const auto& x : c_)
      if (&x.field() != f_) throw std::invalid_argument("polynomial coefficients from different fields");
    trim();
  }

  static Poly constant(const E& a) { return Poly(a.field(), {a}); }
  static Poly x(const field_type& f) { return Poly(f, {f.zero(), f.one()}); }
  static Poly monomial(const E& a, std::size_t k) {
    std::vector<E> c(k + 1, a.field().zero());
    c[k] = a;
    return Poly(a.field(), std::move(c));
  }
  /// x + a
  static Poly linear(const E& a) { return Poly(a.field(), {a, a.field().one()}); }

  const field_type& field() const { return *f_; }
  const field_type* field_ptr() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  const std::vector<E>& coeffs() const { return c_; }
  E lead() const { return c_.empty() ? f_->zero() : c_.back(); }
  E operator[](std::size_t i) const { return i < c_.size() ? c_[i] : f_->zero(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    check(a, b);
    std::vector<E> c(std::max(a.c_.size(), b.c_.size()), a.f_->zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(a.f_, std::move(c), 0);
  }
  friend Poly operator-(const Poly& a) {
    std::vector<E> c = a.c_;
    for (auto& x : c) x = -x;
    return Poly(a.f_, std::move(c), 0);
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    check(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(*a.f_);
    std::vector<E> c(a.c_.size() + b.c_.size() - 1, a.f_->zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(a.f_, std::move(c), 0);
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly scale(const E& a) const {
    std::vector<E> c = c_;
    for (auto& x : c) x *= a;
    return Poly(f_, std::move(c), 0);
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }

  /// Encoding order: by degree, then coefficients from the top down. For
  /// polynomials of equal degree this is the order of sum_i e(c_i) q^i.
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
      if (a.c_[i].encode() != b.c_[i].encode()) return a.c_[i].encode() < b.c_[i].encode();
    }
    return false;
  }

 private:
  Poly(const field_type* f, std::vector<E> c, int) : f_(f), c_(std::move(c)) { trim(); }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  static void check(const Poly& a, const Poly& b) {
    if (a.f_ != b.f_) throw std::invalid_argument("polynomials over different fields");
  }

  const field_type* f_ = nullptr;
  std::vector<E> c_;
};

using FPoly = Poly<Felt>;
using EPoly = Poly<ExtElt>;

template <class E>
std::pair<Poly<E>, Poly<E>> divrem(const Poly<E>& a, const Poly<E>& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.field_ptr() != b.field_ptr()) throw std::invalid_argument("polynomials over different fields");
  const auto& f = a.field();
  if (a.degree() < b.degree()) return {Poly<E>(f), a};
  std::vector<E> r = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  std::vector<E> q(r.size() - db, f.zero());
  const E lcinv = b.lead().inv();
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i].is_zero()) continue;
    const E t = r[i] * lcinv;
    q[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= t * d[j];
  }
  r.resize(db);
  return {Poly<E>(f, std::move(q)), Poly<E>(f, std::move(r))};
}

template <class E>
Poly<E> operator%(const Poly<E>& a, const Poly<E>& b) {
  return divrem(a, b).second;
}

/// (lc, f / lc). The zero polynomial is rejected.
template <class E>
std::pair<E, Poly<E>> monicize(const Poly<E>& f) {
  if (f.is_zero()) throw std::domain_error("monicize of the zero polynomial");
  const E lc = f.lead();
  return {lc, f.scale(lc.inv())};
}

template <class E>
Poly<E> monic(const Poly<E>& f) {
  return monicize(f).second;
}

template <class E>
Poly<E> gcd(Poly<E> a, Poly<E> b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class E>
E eval(const Poly<E>& f, const E& x) {
  E r = f.field().zero();
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

/// f(g(x))
template <class E>
Poly<E> compose(const Poly<E>& f, const Poly<E>& g) {
  if (f.field_ptr() != g.field_ptr()) throw std::invalid_argument("polynomials over different fields");
  Poly<E> r(f.field());
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) r = r * g + Poly<E>::constant(c[i]);
  return r;
}

template <class E>
Poly<E> pow(Poly<E> base, std::uint64_t e) {
  Poly<E> r = Poly<E>::constant(base.field().one());
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

template <class E>
Poly<E> pow_mod(Poly<E> base, std::uint64_t e, const Poly<E>& modulus) {
  if (modulus.degree() < 1) throw std::domain_error("pow_mod: modulus must have degree >= 1");
  Poly<E> r = Poly<E>::constant(base.field().one()) % modulus;
  base = base % modulus;
  while (e) {
    if (e & 1) r = (r * base) % modulus;
    e >>= 1;
    if (e) base = (base * base) % modulus;
  }
  return r;
}

template <class E>
Poly<E> derivative(const Poly<E>& f) {
  const auto& c = f.coeffs();
  if (c.size() <= 1) return Poly<E>(f.field());
  std::vector<E> d(c.size() - 1, f.field().zero());
  for (std::size_t i = 1; i < c.size(); ++i) {
    E k = f.field().zero();
    // i * c_i computed by repeated addition of one, reduced mod p by the field.
    for (std::size_t t = 0; t < i % f.field().characteristic(); ++t) k += f.field().one();
    d[i - 1] = k * c[i];
  }
  return Poly<E>(f.field(), std::move(d));
}

/// x^n f(1/x), with trailing zero coefficients of f dropped first.
template <class E>
Poly<E> reciprocal(const Poly<E>& f) {
  if (f.is_zero()) throw std::domain_error("reciprocal of the zero polynomial");
  std::vector<E> c(f.coeffs().rbegin(), f.coeffs().rend());
  return Poly<E>(f.field(), std::move(c));
}

/// Rabin's test: f of degree n is irreducible iff x^{q^n} = x mod f and
/// gcd(x^{q^{n/r}} - x, f) = 1 for every prime r | n.
template <class E>
bool is_irreducible(const Poly<E>& f) {
  const int n = f.degree();
  if (n < 1) throw std::domain_error("is_irreducible: constant polynomial");
  if (n == 1) return true;
  const auto& fld = f.field();
  const std::uint64_t q = fld.q();
  if (q <= 64) {
    // cheap root scan rejects most reducible inputs
    for (std::uint64_t c = 0; c < q; ++c)
      if (eval(f, fld.element(c)).is_zero()) return false;
    if (n <= 3) return true;
  }
  const Poly<E> x = Poly<E>::x(fld);
  std::vector<Poly<E>> frob{x % f};
  for (int k = 1; k <= n; ++k) frob.push_back(pow_mod(frob.back(), q, f));
  if (!(frob[n] == x % f)) return false;
  for (auto r : prime_divisors(static_cast<std::uint64_t>(n))) {
    const Poly<E> g = gcd(frob[n / r] - x, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

/// Monic polynomial of degree n whose lower coefficients are the base-q digits of t.
inline FPoly monic_from_index(const Field& f, int n, std::uint64_t t) {
  std::vector<Felt> c(n + 1, f.zero());
  for (int i = 0; i < n; ++i) {
    c[i] = f.element(t % f.q());
    t /= f.q();
  }
  c[n] = f.one();
  return FPoly(f, std::move(c));
}

inline std::uint64_t count_monic(const Field& f, int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(c, static_cast<std::uint64_t>(f.q()), &c))
      throw std::overflow_error("too many polynomials to enumerate");
  }
  return c;
}

/// All monic irreducibles of degree n in encoding order.
inline std::vector<FPoly> enumerate_monic_irreducibles(const Field& f, int n) {
  if (n < 1) throw std::invalid_argument("enumerate_monic_irreducibles: n must be >= 1");
  std::vector<FPoly> out;
  const std::uint64_t total = count_monic(f, n);
  for (std::uint64_t t = 0; t < total; ++t) {
    FPoly g = monic_from_index(f, n, t);
    if (is_irreducible(g)) out.push_back(std::move(g));
  }
  return out;
}

/// Text form "c_k*x^k+...+c_0"; coefficients are element encodings and unit
/// coefficients are omitted on non-constant terms.
template <class E>
std::string to_string(const Poly<E>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    if (!first) os << '+';
    first = false;
    const bool unit = c[i].is_one();
    if (i == 0) {
      os << c[i].encode();
      continue;
    }
    if (!unit) os << c[i].encode() << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

template <class E>
std::vector<std::uint64_t> coeff_codes(const Poly<E>& f) {
  std::vector<std::uint64_t> out;
  for (const auto& c : f.coeffs()) out.push_back(c.encode());
  return out;
}

inline FPoly poly_from_codes(const Field& f, const std::vector<std::uint64_t>& codes) {
  std::vector<Felt> c;
  for (auto v : codes) c.push_back(f.element(v));
  return FPoly(f, std::move(c));
}

/// Parses the text form produced by to_string.
inline FPoly parse_poly(const Field& f, const std::string& text) {
  FPoly out(f);
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
      neg = s[pos] == '-';
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw std::invalid_argument("malformed polynomial text: " + text);
    Felt coef = f.one();
    std::size_t deg = 0;
    const auto xpos = term.find('x');
    if (xpos == std::string::npos) {
      coef = f.element(std::stoull(term));
    } else {
      if (xpos > 0) {
        std::string cs = term.substr(0, xpos);
        if (cs.back() != '*') throw std::invalid_argument("malformed term: " + term);
        cs.pop_back();
        coef = f.element(std::stoull(cs));
      }
      deg = 1;
      if (xpos + 1 < term.size()) {
        if (term[xpos + 1] != '^') throw std::invalid_argument("malformed term: " + term);
        deg = std::stoull(term.substr(xpos + 2));
      }
    }
    if (neg) coef = -coef;
    out += FPoly::monomial(coef, deg);
    pos = end;
  }
  return out;
}

}  // namespace pglinv
