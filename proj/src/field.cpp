#include "qshuffle/field.hpp"

#include <algorithm>
#include <sstream>

namespace qshuffle {

namespace {

constexpr std::uint32_t kMaxFieldSize = 256;

using Poly = std::vector<std::uint32_t>;  // low to high, over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * b[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
  }
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const {
  Coeff r = 1 % p_;
  Coeff b = a % p_;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw DivisionByZero("PrimeField: inverse of zero");
  return pow(a, p_ - 2);
}

Coeff binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  const PrimeField f(p);
  Coeff result = 1 % p;
  while (n > 0 || k > 0) {
    const std::uint64_t ni = n % p;
    const std::uint64_t ki = k % p;
    if (ki > ni) return 0;
    // C(ni, ki) with ni < p: product formula, denominators invertible.
    Coeff num = 1, den = 1;
    for (std::uint64_t i = 0; i < ki; ++i) {
      num = f.mul(num, static_cast<Coeff>((ni - i) % p));
      den = f.mul(den, static_cast<Coeff>((i + 1) % p));
    }
    result = f.mul(result, f.mul(num, f.inv(den)));
    n /= p;
    k /= p;
  }
  return result;
}

Coeff delta_coeff(int a, int b, int j, std::uint32_t p) {
  if (a < 1 || b < 1 || j < 1) {
    throw std::invalid_argument("delta_coeff: a, b, j must be positive");
  }
  const PrimeField f(p);
  Coeff ta = binom_mod_p(j - 1, a - 1, p);
  Coeff tb = binom_mod_p(j - 1, b - 1, p);
  if ((a - 1) % 2) ta = f.neg(ta);
  if ((b - 1) % 2) tb = f.neg(tb);
  return f.add(ta, tb);
}

PrimePower prime_power(std::uint32_t q) {
  if (q < 2) throw std::invalid_argument("field size must be at least 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t rest = q;
  int e = 0;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) {
    throw std::invalid_argument("field size " + std::to_string(q) + " is not a prime power");
  }
  return {p, e};
}

std::vector<std::uint32_t> FiniteField::default_modulus(std::uint32_t q) {
  switch (q) {
    case 4: return {1, 1, 1};           // u^2 + u + 1
    case 8: return {1, 1, 0, 1};        // u^3 + u + 1
    case 9: return {2, 2, 1};           // u^2 + 2u + 2
    case 16: return {1, 1, 0, 0, 1};    // u^4 + u + 1
    case 25: return {2, 4, 1};          // u^2 + 4u + 2
    case 27: return {1, 2, 0, 1};       // u^3 + 2u + 1
    case 32: return {1, 0, 1, 0, 0, 1};  // u^5 + u^2 + 1
    default: break;
  }
  const auto [p, e] = prime_power(q);
  if (e == 1) return {0, 1};
  // Smallest irreducible in lexicographic order of the low coefficients.
  std::vector<std::uint32_t> m(e + 1, 0);
  m[e] = 1;
  std::uint64_t count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < e; ++i) {
      m[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (is_irreducible(p, m)) return m;
  }
  throw std::logic_error("no irreducible polynomial found");
}

bool FiniteField::is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
  if (modulus.size() < 2 || modulus.back() != 1) return false;
  const int e = static_cast<int>(modulus.size()) - 1;
  if (e == 1) return true;
  for (int d = 1; d <= e / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    Poly divisor(d + 1, 0);
    divisor[d] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (poly_mod(modulus, divisor, p).empty()) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t q) : FiniteField(prime_power(q).p, default_modulus(q)) {}

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), e_(static_cast<int>(modulus.size()) - 1), q_(1), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw std::invalid_argument("FiniteField: characteristic is not prime");
  if (e_ < 1) throw std::invalid_argument("FiniteField: modulus must have degree >= 1");
  for (auto c : modulus_) {
    if (c >= p) throw std::invalid_argument("FiniteField: modulus coefficient out of range");
  }
  if (!is_irreducible(p, modulus_)) {
    throw std::invalid_argument("FiniteField: modulus is not monic irreducible");
  }
  for (int i = 0; i < e_; ++i) {
    q_ *= p_;
    if (q_ > kMaxFieldSize) throw std::invalid_argument("FiniteField: field too large");
  }
  build_tables();
}

FiniteField::Elem FiniteField::from_coeffs(const std::vector<std::uint32_t>& c) const {
  if (static_cast<int>(c.size()) > e_) {
    // Reduce longer polynomials modulo the modulus.
    Poly r = poly_mod(Poly(c.begin(), c.end()), modulus_, p_);
    return from_coeffs(r);
  }
  std::uint32_t v = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * p_ + c[i] % p_;
  return static_cast<Elem>(v);
}

std::vector<std::uint32_t> FiniteField::coeffs(Elem a) const {
  std::vector<std::uint32_t> c(e_, 0);
  std::uint32_t v = a;
  for (int i = 0; i < e_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

void FiniteField::build_tables() {
  add_.assign(q_ * q_, 0);
  mul_.assign(q_ * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);
  std::vector<Poly> polys(q_);
  for (std::uint32_t a = 0; a < q_; ++a) polys[a] = coeffs(static_cast<Elem>(a));
  for (std::uint32_t a = 0; a < q_; ++a) {
    Poly n(e_);
    for (int i = 0; i < e_; ++i) n[i] = (p_ - polys[a][i]) % p_;
    neg_[a] = from_coeffs(n);
    for (std::uint32_t b = 0; b < q_; ++b) {
      Poly s(e_);
      for (int i = 0; i < e_; ++i) s[i] = (polys[a][i] + polys[b][i]) % p_;
      add_[a * q_ + b] = from_coeffs(s);
      Poly prod(2 * e_ - 1, 0);
      for (int i = 0; i < e_; ++i) {
        for (int j = 0; j < e_; ++j) {
          prod[i + j] = (prod[i + j] + polys[a][i] * polys[b][j]) % p_;
        }
      }
      mul_[a * q_ + b] = from_coeffs(poly_mod(prod, modulus_, p_));
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a) {
    for (std::uint32_t b = 1; b < q_; ++b) {
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = static_cast<Elem>(b);
        break;
      }
    }
  }
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw DivisionByZero("FiniteField: inverse of zero");
  return inv_[a];
}

std::string FiniteField::to_string(Elem a) const {
  if (e_ == 1) return std::to_string(a);
  std::ostringstream os;
  os << '[';
  const auto c = coeffs(a);
  for (int i = 0; i < e_; ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ']';
  return os.str();
}

}  // namespace qshuffle
