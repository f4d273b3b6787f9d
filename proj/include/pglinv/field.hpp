#pragma once

// Finite fields F_q (q = p^s) and their quadratic extensions F_{q^2}.
//
// Elements are stored by their integer encoding e(x) = sum_i x_i p^i, where
// (x_0, ..., x_{s-1}) are the coordinates of x in the power basis of the
// defining modulus. Field objects are interned: make_field(p, s) always
// returns the same object for the same (p, s), so elements can carry a plain
// pointer to their field and equality of fields is pointer equality.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pglinv/numtheory.hpp"

namespace pglinv {

class Field;
class ExtField;

/// An element of F_q.
class Felt {
 public:
  using field_type = Field;

  Felt() = default;
  Felt(const Field* f, std::uint32_t code) : f_(f), v_(code) {}

  const Field& field() const { return *f_; }
  const Field* field_ptr() const { return f_; }
  std::uint32_t encode() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Felt inv() const;
  Felt pow(std::uint64_t e) const;

  friend Felt operator+(Felt a, Felt b);
  friend Felt operator-(Felt a, Felt b);
  friend Felt operator*(Felt a, Felt b);
  friend Felt operator/(Felt a, Felt b) { return a * b.inv(); }
  friend Felt operator-(Felt a);
  Felt& operator+=(Felt b) { return *this = *this + b; }
  Felt& operator-=(Felt b) { return *this = *this - b; }
  Felt& operator*=(Felt b) { return *this = *this * b; }

  friend bool operator==(Felt a, Felt b) { return a.f_ == b.f_ && a.v_ == b.v_; }
  /// Orders by integer encoding.
  friend bool operator<(Felt a, Felt b) { return a.v_ < b.v_; }

 private:
  const Field* f_ = nullptr;
  std::uint32_t v_ = 0;
};

/// The field F_{p^s} with its deterministic defining modulus.
class Field {
 public:
  using elem = Felt;

  std::uint32_t p() const { return p_; }
  std::uint32_t characteristic() const { return p_; }
  unsigned s() const { return s_; }
  std::uint32_t q() const { return q_; }
  /// Ascending coefficients of the monic degree-s modulus over F_p ([0, 1] when s = 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Felt zero() const { return {this, 0}; }
  Felt one() const { return {this, 1}; }
  Felt element(std::uint64_t code) const {
    if (code >= q_) throw std::out_of_range("element encoding out of range for F_" + std::to_string(q_));
    return {this, static_cast<std::uint32_t>(code)};
  }
  /// Image of an integer under Z -> F_p -> F_q.
  Felt from_int(std::int64_t n) const {
    auto r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {this, static_cast<std::uint32_t>(r)};
  }
  /// The primitive element with minimal encoding.
  Felt primitive() const { return {this, prim_}; }

  std::vector<std::uint32_t> coords(std::uint32_t code) const {
    std::vector<std::uint32_t> c(s_);
    for (unsigned i = 0; i < s_; ++i) {
      c[i] = code % p_;
      code /= p_;
    }
    return c;
  }

  /// "p^s [m_0,...,m_s]"
  std::string describe() const {
    std::ostringstream os;
    os << p_ << '^' << s_ << " [";
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
    os << ']';
    return os.str();
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (s_ == 1) {
      const std::uint32_t r = a + b;
      return r >= p_ ? r - p_ : r;
    }
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < s_; ++i) {
      std::uint32_t d = a % p_ + b % p_;
      if (d >= p_) d -= p_;
      out += d * scale;
      scale *= p_;
      a /= p_;
      b /= p_;
    }
    return out;
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (s_ == 1) return a == 0 ? 0 : p_ - a;
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < s_; ++i) {
      const std::uint32_t d = a % p_;
      out += (d == 0 ? 0 : p_ - d) * scale;
      scale *= p_;
      a /= p_;
    }
    return out;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (s_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(q_));
    if (s_ == 1) return pow(a, p_ - 2);
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  friend const Field& make_field(std::uint64_t p, unsigned s);

  Field(std::uint32_t p, unsigned s) : p_(p), s_(s) {
    q_ = 1;
    for (unsigned i = 0; i < s; ++i) q_ *= p;
    if (s == 1) {
      modulus_ = {0, 1};
    } else {
      modulus_ = find_modulus();
    }
    prim_ = find_primitive();
    if (s_ > 1) {
      exp_.assign(q_ - 1, 0);
      log_.assign(q_, 0);
      std::uint32_t x = 1;
      for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = mul_slow(x, prim_);
      }
    }
  }

  // Polynomials over F_p as ascending coefficient vectors, used only to pick the modulus.
  static std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& m,
                                             std::uint32_t p) {
    // m monic
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
      const std::uint32_t lc = a.back();
      if (lc != 0) {
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
          a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + static_cast<std::uint64_t>(p - lc) * m[i]) % p);
      }
      a.pop_back();
    }
    return a;
  }

  // Irreducibility over F_p by trial division with every monic polynomial of degree <= s/2.
  static bool irreducible_over_prime(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    const std::size_t n = f.size() - 1;
    for (std::size_t d = 1; d <= n / 2; ++d) {
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < d; ++i) count *= p;
      for (std::uint64_t t = 0; t < count; ++t) {
        std::vector<std::uint32_t> g(d + 1);
        std::uint64_t x = t;
        for (std::size_t i = 0; i < d; ++i) {
          g[i] = static_cast<std::uint32_t>(x % p);
          x /= p;
        }
        g[d] = 1;
        auto r = poly_rem(f, g, p);
        bool zero = true;
        for (auto c : r) zero = zero && c == 0;
        if (zero) return false;
      }
    }
    return true;
  }

  std::vector<std::uint32_t> find_modulus() const {
    for (std::uint32_t t = 0; t < q_; ++t) {
      std::vector<std::uint32_t> f(s_ + 1);
      std::uint32_t x = t;
      for (unsigned i = 0; i < s_; ++i) {
        f[i] = x % p_;
        x /= p_;
      }
      f[s_] = 1;
      if (irreducible_over_prime(f, p_)) return f;
    }
    throw std::logic_error("no irreducible modulus found");
  }

  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
    if (s_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    const auto ca = coords(a), cb = coords(b);
    std::vector<std::uint32_t> prod(2 * s_ - 1, 0);
    for (unsigned i = 0; i < s_; ++i)
      for (unsigned j = 0; j < s_; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_);
    auto r = poly_rem(std::move(prod), modulus_, p_);
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < s_ && i < r.size(); ++i) {
      out += r[i] * scale;
      scale *= p_;
    }
    return out;
  }

  std::uint32_t pow_slow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint32_t find_primitive() const {
    const auto primes = prime_divisors(q_ - 1 == 0 ? 1 : q_ - 1);
    for (std::uint32_t g = 1; g < q_; ++g) {
      bool ok = true;
      for (auto r : primes) {
        if (q_ - 1 == 1) break;
        if (pow_slow(g, (q_ - 1) / r) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) return g;
    }
    throw std::logic_error("no primitive element found");
  }

  std::uint32_t p_ = 0;
  unsigned s_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t prim_ = 1;
  std::vector<std::uint32_t> exp_, log_;
};

namespace detail {
inline void same_field(const Field* a, const Field* b) {
  if (a != b) throw std::invalid_argument("field elements from different fields");
}
}  // namespace detail

inline Felt operator+(Felt a, Felt b) {
  detail::same_field(a.f_, b.f_);
  return {a.f_, a.f_->add(a.v_, b.v_)};
}
inline Felt operator-(Felt a, Felt b) {
  detail::same_field(a.f_, b.f_);
  return {a.f_, a.f_->sub(a.v_, b.v_)};
}
inline Felt operator*(Felt a, Felt b) {
  detail::same_field(a.f_, b.f_);
  return {a.f_, a.f_->mul(a.v_, b.v_)};
}
inline Felt operator-(Felt a) { return {a.f_, a.f_->neg(a.v_)}; }
inline Felt Felt::inv() const { return {f_, f_->inv(v_)}; }
inline Felt Felt::pow(std::uint64_t e) const { return {f_, f_->pow(v_, e)}; }

/// Interned F_{p^s}; the modulus is the monic irreducible of degree s with
/// minimal encoding sum_i c_i p^i. Arithmetic tables are built for s > 1, so
/// q is capped at 2^16 there.
inline const Field& make_field(std::uint64_t p, unsigned s) {
  if (!is_prime(p)) throw std::invalid_argument("make_field: p = " + std::to_string(p) + " is not prime");
  if (s < 1) throw std::invalid_argument("make_field: extension degree must be >= 1");
  if (s == 1 && p >= (1ULL << 31)) throw std::invalid_argument("make_field: p too large");
  if (s > 1) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < s; ++i) {
      q *= p;
      if (q > (1ULL << 16)) throw std::invalid_argument("make_field: q too large for table arithmetic");
    }
  }
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<Field>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{p, s}];
  if (!slot) slot.reset(new Field(static_cast<std::uint32_t>(p), s));
  return *slot;
}

/// Least d >= 1 with x^d = 1.
inline std::uint64_t mult_order(Felt x) {
  if (x.is_zero()) throw std::domain_error("mult_order of zero");
  std::uint64_t n = x.field().q() - 1;
  for (auto r : prime_divisors(n == 0 ? 1 : n)) {
    while (n % r == 0 && x.pow(n / r).is_one()) n /= r;
  }
  return n;
}

inline bool is_square(Felt x) {
  const auto& f = x.field();
  if (f.p() == 2 || x.is_zero()) return true;
  return x.pow((f.q() - 1) / 2).is_one();
}

inline Felt smallest_nonsquare(const Field& f) {
  if (f.p() == 2) throw std::domain_error("smallest_nonsquare: every element of an even field is a square");
  for (std::uint32_t c = 2; c < f.q(); ++c)
    if (!is_square(f.element(c))) return f.element(c);
  throw std::logic_error("no non-square found");
}

inline Felt element_of_mult_order(const Field& f, std::uint64_t d) {
  if (d == 0 || (f.q() - 1) % d != 0)
    throw std::invalid_argument("element_of_mult_order: d must divide q-1");
  return f.primitive().pow((f.q() - 1) / d);
}

// ---------------------------------------------------------------------------
// Quadratic extension F_{q^2} = F_q[w] / (w^2 + a1 w + a0).

class ExtElt;

class ExtField {
 public:
  using elem = ExtElt;

  const Field& base() const { return *base_; }
  /// modulus2 = x^2 + a1 x + a0
  Felt a0() const { return a0_; }
  Felt a1() const { return a1_; }
  std::uint32_t characteristic() const { return base_->p(); }
  std::uint64_t q() const { return static_cast<std::uint64_t>(base_->q()) * base_->q(); }

  ExtElt zero() const;
  ExtElt one() const;
  ExtElt omega() const;
  ExtElt element(std::uint64_t code) const;
  ExtElt embed(Felt x) const;
  ExtElt make(Felt u, Felt v) const;
  ExtElt primitive() const;

  ExtField(const ExtField&) = delete;
  ExtField& operator=(const ExtField&) = delete;

 private:
  friend const ExtField& make_ext(const Field& f);
  explicit ExtField(const Field& f);

  const Field* base_;
  Felt a0_, a1_;
  std::uint64_t prim_ = 0;
};

/// u + v w with u, v in F_q.
class ExtElt {
 public:
  using field_type = ExtField;

  ExtElt() = default;
  ExtElt(const ExtField* e, Felt u, Felt v) : e_(e), u_(u), v_(v) {}

  const ExtField& field() const { return *e_; }
  Felt u() const { return u_; }
  Felt v() const { return v_; }
  /// e(u) + q e(v)
  std::uint64_t encode() const { return u_.encode() + static_cast<std::uint64_t>(e_->base().q()) * v_.encode(); }
  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  bool is_one() const { return u_.is_one() && v_.is_zero(); }

  friend ExtElt operator+(const ExtElt& a, const ExtElt& b) {
    check(a, b);
    return {a.e_, a.u_ + b.u_, a.v_ + b.v_};
  }
  friend ExtElt operator-(const ExtElt& a, const ExtElt& b) {
    check(a, b);
    return {a.e_, a.u_ - b.u_, a.v_ - b.v_};
  }
  friend ExtElt operator-(const ExtElt& a) { return {a.e_, -a.u_, -a.v_}; }
  friend ExtElt operator*(const ExtElt& a, const ExtElt& b) {
    check(a, b);
    const Felt vv = a.v_ * b.v_;
    return {a.e_, a.u_ * b.u_ - a.e_->a0() * vv, a.u_ * b.v_ + a.v_ * b.u_ - a.e_->a1() * vv};
  }
  friend ExtElt operator/(const ExtElt& a, const ExtElt& b) { return a * b.inv(); }
  ExtElt& operator+=(const ExtElt& b) { return *this = *this + b; }
  ExtElt& operator-=(const ExtElt& b) { return *this = *this - b; }
  ExtElt& operator*=(const ExtElt& b) { return *this = *this * b; }

  /// x^q, using w^q = -a1 - w.
  ExtElt frobenius() const { return {e_, u_ - e_->a1() * v_, -v_}; }
  /// x^{q+1}, an element of F_q.
  Felt norm() const {
    const ExtElt n = *this * frobenius();
    return n.u_;
  }
  ExtElt inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero in F_{q^2}");
    const Felt ninv = norm().inv();
    const ExtElt c = frobenius();
    return {e_, c.u_ * ninv, c.v_ * ninv};
  }
  ExtElt pow(std::uint64_t e) const {
    ExtElt r = e_->one(), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }
  std::optional<Felt> try_descend() const {
    if (!v_.is_zero()) return std::nullopt;
    return u_;
  }

  friend bool operator==(const ExtElt& a, const ExtElt& b) { return a.e_ == b.e_ && a.u_ == b.u_ && a.v_ == b.v_; }
  friend bool operator<(const ExtElt& a, const ExtElt& b) { return a.encode() < b.encode(); }

 private:
  static void check(const ExtElt& a, const ExtElt& b) {
    if (a.e_ != b.e_) throw std::invalid_argument("extension elements from different fields");
  }
  const ExtField* e_ = nullptr;
  Felt u_, v_;
};

inline ExtElt ExtField::zero() const { return {this, base_->zero(), base_->zero()}; }
inline ExtElt ExtField::one() const { return {this, base_->one(), base_->zero()}; }
inline ExtElt ExtField::omega() const { return {this, base_->zero(), base_->one()}; }
inline ExtElt ExtField::element(std::uint64_t code) const {
  if (code >= q()) throw std::out_of_range("extension element encoding out of range");
  return {this, base_->element(code % base_->q()), base_->element(code / base_->q())};
}
inline ExtElt ExtField::embed(Felt x) const {
  detail::same_field(&x.field(), base_);
  return {this, x, base_->zero()};
}
inline ExtElt ExtField::make(Felt u, Felt v) const {
  detail::same_field(&u.field(), base_);
  detail::same_field(&v.field(), base_);
  return {this, u, v};
}
inline ExtElt ExtField::primitive() const { return element(prim_); }

/// Absolute trace F_{2^s} -> F_2.
inline Felt absolute_trace_char2(Felt b) {
  Felt t = b, x = b;
  for (unsigned i = 1; i < b.field().s(); ++i) {
    x = x * x;
    t += x;
  }
  return t;
}

inline ExtField::ExtField(const Field& f) : base_(&f) {
  if (f.p() != 2) {
    // x^2 - beta
    a1_ = f.zero();
    a0_ = -smallest_nonsquare(f);
  } else {
    // x^2 + x + beta with Tr(beta) = 1
    a1_ = f.one();
    a0_ = f.zero();
    for (std::uint32_t c = 1; c < f.q(); ++c) {
      if (absolute_trace_char2(f.element(c)).is_one()) {
        a0_ = f.element(c);
        break;
      }
    }
  }
  const std::uint64_t n = q() - 1;
  const auto primes = prime_divisors(n);
  for (std::uint64_t c = 1; c < q(); ++c) {
    const ExtElt g = element(c);
    bool ok = true;
    for (auto r : primes) {
      if (g.pow(n / r).is_one()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      prim_ = c;
      return;
    }
  }
  throw std::logic_error("no primitive element of F_{q^2} found");
}

inline const ExtField& make_ext(const Field& f) {
  static std::mutex mu;
  static std::map<const Field*, std::unique_ptr<ExtField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[&f];
  if (!slot) slot.reset(new ExtField(f));
  return *slot;
}

inline ExtElt embed(Felt x) { return make_ext(x.field()).embed(x); }
inline std::optional<Felt> try_descend(const ExtElt& x) { return x.try_descend(); }
inline ExtElt frobenius_q(const ExtElt& x) { return x.frobenius(); }

inline std::uint64_t mult_order(const ExtElt& x) {
  if (x.is_zero()) throw std::domain_error("mult_order of zero");
  std::uint64_t n = x.field().q() - 1;
  for (auto r : prime_divisors(n)) {
    while (n % r == 0 && x.pow(n / r).is_one()) n /= r;
  }
  return n;
}

inline ExtElt element_of_mult_order(const ExtField& e, std::uint64_t d) {
  if (d == 0 || (e.q() - 1) % d != 0)
    throw std::invalid_argument("element_of_mult_order: d must divide q^2-1");
  return e.primitive().pow((e.q() - 1) / d);
}

}  // namespace pglinv
