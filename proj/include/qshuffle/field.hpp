#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qshuffle {

/// Residue in [0, p) of a prime field.
using Coeff = std::uint32_t;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

bool is_prime(std::uint64_t n);

/// The prime field F_p for a small prime p.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  Coeff reduce(std::int64_t v) const {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const { return (a + b) % p_; }
  Coeff sub(Coeff a, Coeff b) const { return (a + p_ - b) % p_; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::uint64_t e) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// C(n, k) mod p by Lucas' theorem; 0 when k > n.
Coeff binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// The q-shuffle coefficient (-1)^{a-1} C(j-1, a-1) + (-1)^{b-1} C(j-1, b-1) in F_p.
Coeff delta_coeff(int a, int b, int j, std::uint32_t p);

/// Decompose q = p^e; throws std::invalid_argument unless q is a prime power.
struct PrimePower {
  std::uint32_t p;
  int e;
};
PrimePower prime_power(std::uint32_t q);

/// F_q = F_p[u]/(modulus). Elements are packed as sum c_i p^i with c_i the
/// coefficient of u^i, so the additive identity is 0 and the unit is 1.
class FiniteField {
 public:
  using Elem = std::uint16_t;

  /// Uses the shipped default modulus for q.
  explicit FiniteField(std::uint32_t q);
  /// modulus is monic of degree e, coefficients low to high (length e + 1).
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  int degree() const { return e_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_prime(Coeff c) const { return static_cast<Elem>(c % p_); }
  Elem from_coeffs(const std::vector<std::uint32_t>& c) const;
  std::vector<std::uint32_t> coeffs(Elem a) const;

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem inv(Elem a) const;

  std::string to_string(Elem a) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

  /// Default moduli, coefficients low to high; Conway polynomials where tabulated.
  static std::vector<std::uint32_t> default_modulus(std::uint32_t q);
  static bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& modulus);

 private:
  void build_tables();

  std::uint32_t p_;
  int e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_;
};

}  // namespace qshuffle
