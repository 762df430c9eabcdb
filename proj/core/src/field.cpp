#include "kuelsh/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>

namespace kuelsh {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

// --- dense polynomials over F_p, coefficients low-to-high, trimmed ---

using Poly = std::vector<u64>;

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial x^k + sum f_i x^i.
void poly_reduce(Poly& a, const Poly& f, u64 p) {
  const std::size_t k = f.size();
  for (std::size_t i = a.size(); i-- > k;) {
    u64 c = a[i];
    if (c == 0) continue;
    a[i] = 0;
    for (std::size_t j = 0; j < k; ++j) {
      u64 t = mulmod_u64(c, f[j], p);
      a[i - k + j] = (a[i - k + j] + p - t) % p;
    }
  }
  if (a.size() > k) a.resize(k);
  poly_trim(a);
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + mulmod_u64(a[i], b[j], p)) % p;
  }
  poly_reduce(r, f, p);
  return r;
}

Poly poly_powmod(Poly a, u64 e, const Poly& f, u64 p) {
  Poly r{1};
  while (e) {
    if (e & 1) r = poly_mulmod(r, a, f, p);
    a = poly_mulmod(a, a, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_mod(Poly a, const Poly& b, u64 p) {
  poly_trim(a);
  const std::size_t db = b.size() - 1;
  u64 lead_inv = powmod_u64(b.back(), p - 2, p);
  while (a.size() > db) {
    u64 c = mulmod_u64(a.back(), lead_inv, p);
    std::size_t shift = a.size() - 1 - db;
    if (c != 0) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        u64 t = mulmod_u64(c, b[j], p);
        a[shift + j] = (a[shift + j] + p - t) % p;
      }
    }
    poly_trim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t r = 2; r * r <= n; ++r) {
    if (n % r) continue;
    out.push_back(r);
    while (n % r == 0) n /= r;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin irreducibility test; f is the low-coefficient list of a monic
// polynomial of degree k = f.size().
bool is_irreducible(const Poly& f, u64 p) {
  const std::size_t k = f.size();
  if (k == 1) return true;

  // x^(p^j) mod f by iterating t -> t^p.
  auto frob_iter = [&](Poly t, std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) t = poly_powmod(t, p, f, p);
    return t;
  };

  Poly x{0, 1};
  if (frob_iter(x, k) != x) return false;

  Poly full = f;  // f including its leading 1
  full.push_back(1);
  for (std::size_t r : prime_factors(k)) {
    Poly diff = frob_iter(x, k / r);
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;  // subtract x
    poly_trim(diff);
    if (poly_gcd(full, diff, p).size() > 1) return false;
  }
  return true;
}

// Lexicographically smallest irreducible monic polynomial of degree k,
// coefficient list (c_0, ..., c_{k-1}) compared low-to-high.
Poly smallest_irreducible(u64 p, u64 k) {
  if (k == 1) return {0};  // the polynomial x
  Poly c(k, 0);
  // Odometer with c_0 most significant: c_{k-1} varies fastest.
  for (;;) {
    if (c[0] != 0 && is_irreducible(c, p)) return c;
    std::size_t i = k;
    while (i-- > 0) {
      if (++c[i] < p) break;
      c[i] = 0;
      if (i == 0) fail(errc::size_overflow, "no irreducible modulus found");
    }
  }
}

}  // namespace

const Field& Field::get(u64 p, u64 k) {
  static std::mutex mu;
  static std::map<std::pair<u64, u64>, std::unique_ptr<Field>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find({p, k});
  if (it == registry.end()) {
    it = registry.emplace(std::pair{p, k}, std::unique_ptr<Field>(new Field(p, k)))
             .first;
  }
  return *it->second;
}

Field::Field(u64 p, u64 k) : p_(p), k_(k) {
  if (k == 0) fail(errc::degree_zero, "extension degree must be >= 1");
  if (!is_prime_u64(p))
    fail(errc::not_prime, "characteristic " + std::to_string(p) + " is not prime");
  constexpr u64 bound = u64(1) << 62;
  u64 q = 1;
  for (u64 i = 0; i < k; ++i) {
    if (q > bound / p)
      fail(errc::size_overflow, "p^k exceeds the 2^62 machine bound");
    q *= p;
  }
  q_ = q;
  mod_ = smallest_irreducible(p, k);

  if (q_ <= table_limit) {
    add_tbl_.resize(q_ * q_);
    mul_tbl_.resize(q_ * q_);
    inv_tbl_.assign(q_, 0);
    neg_tbl_.resize(q_);
    frob_tbl_.resize(q_);
    for (u64 a = 0; a < q_; ++a) {
      for (u64 b = 0; b < q_; ++b) {
        add_tbl_[a * q_ + b] = static_cast<std::uint16_t>(add_nocache(a, b));
        mul_tbl_[a * q_ + b] = static_cast<std::uint16_t>(mul_nocache(a, b));
      }
    }
    for (u64 a = 0; a < q_; ++a) {
      for (u64 b = 0; b < q_; ++b) {
        if (add_tbl_[a * q_ + b] == 0) {
          neg_tbl_[a] = static_cast<std::uint16_t>(b);
          break;
        }
      }
      u64 f = a;
      for (u64 i = 1; i < p_; ++i) f = mul_tbl_[f * q_ + a];  // a^p
      frob_tbl_[a] = static_cast<std::uint16_t>(f);
      if (a != 0) {
        for (u64 b = 1; b < q_; ++b) {
          if (mul_tbl_[a * q_ + b] == 1) {
            inv_tbl_[a] = static_cast<std::uint16_t>(b);
            break;
          }
        }
      }
    }
  }
}

std::vector<u64> Field::decode(u64 a) const {
  std::vector<u64> c(k_);
  for (u64 i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

u64 Field::encode(const std::vector<u64>& c) const {
  u64 a = 0;
  for (u64 i = k_; i-- > 0;) a = a * p_ + (i < c.size() ? c[i] : 0);
  return a;
}

u64 Field::add_nocache(u64 a, u64 b) const {
  if (k_ == 1) return (a + b) % p_;
  u64 r = 0, scale = 1;
  for (u64 i = 0; i < k_; ++i) {
    r += (a % p_ + b % p_) % p_ * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

u64 Field::mul_nocache(u64 a, u64 b) const {
  if (k_ == 1) return mulmod_u64(a, b, p_);
  Poly pa = decode(a), pb = decode(b);
  poly_trim(pa);
  poly_trim(pb);
  Poly r = poly_mulmod(pa, pb, mod_, p_);
  return encode(r);
}

u64 Field::add(u64 a, u64 b) const {
  if (has_tables()) return add_tbl_[a * q_ + b];
  return add_nocache(a, b);
}

u64 Field::neg(u64 a) const {
  if (has_tables()) return neg_tbl_[a];
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  u64 r = 0, scale = 1;
  for (u64 i = 0; i < k_; ++i) {
    u64 d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

u64 Field::sub(u64 a, u64 b) const { return add(a, neg(b)); }

u64 Field::mul(u64 a, u64 b) const {
  if (has_tables()) return mul_tbl_[a * q_ + b];
  return mul_nocache(a, b);
}

u64 Field::pow(u64 a, u64 e) const {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 Field::inv(u64 a) const {
  if (a == 0) fail(errc::division_by_zero, "inverse of zero");
  if (has_tables()) return inv_tbl_[a];
  return pow(a, q_ - 2);
}

u64 Field::div(u64 a, u64 b) const { return mul(a, inv(b)); }

u64 Field::frobenius(u64 a, u64 n) const {
  n %= k_;
  for (u64 i = 0; i < n; ++i) {
    if (has_tables()) {
      a = frob_tbl_[a];
    } else {
      a = pow(a, p_);
    }
  }
  return a;
}

u64 Field::frobenius_inverse(u64 a, u64 n) const {
  n %= k_;
  if (n == 0) return a;
  return frobenius(a, k_ - n);
}

u64 Field::generator() const {
  if (k_ < 2)
    fail(errc::syntax_error, "the generator g is undefined in a prime field");
  return p_;  // digits (0, 1)
}

std::string Field::format(u64 a) const {
  std::vector<u64> c = decode(a);
  std::string out;
  for (u64 i = k_; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c[0]);
      continue;
    }
    if (c[i] != 1) {
      out += std::to_string(c[i]);
      out += '*';
    }
    out += 'g';
    if (i > 1) {
      out += '^';
      out += std::to_string(i);
    }
  }
  if (out.empty()) out = "0";
  return out;
}

u64 Field::parse(std::string_view text) const {
  return parse_field_expr(*this, text, nullptr);
}

namespace {

struct ExprParser {
  const Field& f;
  std::string_view s;
  std::size_t pos = 0;
  const std::function<const u64*(std::string_view)>& lookup;

  [[noreturn]] void err(const std::string& msg) const {
    fail(errc::syntax_error, "field element expression, offset " +
                                 std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  u64 parse_uint() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      err("expected integer");
    u64 v = 0;
    bool overflow = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      if (v > (UINT64_MAX - 9) / 10) overflow = true;
      if (!overflow) v = v * 10 + static_cast<u64>(s[pos] - '0');
      ++pos;
    }
    if (overflow) err("integer literal too large");
    return v;
  }

  u64 parse_int_elem() {
    skip_ws();
    std::size_t start = pos;
    u64 v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = (v * 10 + static_cast<u64>(s[pos] - '0')) % f.p();
      ++pos;
    }
    if (pos == start) err("expected integer");
    return v;  // constant, valid element code
  }

  u64 parse_primary() {
    skip_ws();
    if (pos >= s.size()) err("unexpected end of input");
    u64 base;
    char c = s[pos];
    if (c == '(') {
      ++pos;
      base = parse_expr();
      if (!eat(')')) err("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      base = parse_int_elem();
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string_view name = s.substr(start, pos - start);
      if (name == "g") {
        base = f.generator();
      } else if (lookup) {
        const u64* v = lookup(name);
        if (!v) err("unknown identifier '" + std::string(name) + "'");
        base = *v;
      } else {
        err("unknown identifier '" + std::string(name) + "'");
      }
    } else {
      err(std::string("unexpected character '") + c + "'");
    }
    if (eat('^')) {
      u64 e = parse_uint();
      base = f.pow(base, e);
    }
    return base;
  }

  u64 parse_unary() {
    if (eat('-')) return f.neg(parse_unary());
    if (eat('+')) return parse_unary();
    return parse_primary();
  }

  u64 parse_term() {
    u64 v = parse_unary();
    for (;;) {
      if (eat('*')) {
        v = f.mul(v, parse_unary());
      } else if (eat('/')) {
        v = f.div(v, parse_unary());
      } else {
        return v;
      }
    }
  }

  u64 parse_expr() {
    u64 v = parse_term();
    for (;;) {
      if (eat('+')) {
        v = f.add(v, parse_term());
      } else if (eat('-')) {
        v = f.sub(v, parse_term());
      } else {
        return v;
      }
    }
  }
};

}  // namespace

u64 parse_field_expr(
    const Field& f, std::string_view text,
    const std::function<const u64*(std::string_view)>& lookup) {
  ExprParser parser{f, text, 0, lookup};
  u64 v = parser.parse_expr();
  parser.skip_ws();
  if (parser.pos != text.size()) parser.err("trailing input");
  return v;
}

}  // namespace kuelsh

