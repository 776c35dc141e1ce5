#include "qshuffle/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace qshuffle {

namespace {

using Elem = FiniteField::Elem;

int clamp_precision(long long p) {
  return static_cast<int>(std::min<long long>(p, LaurentSeries::kExact));
}

void check_same_field(const LaurentSeries& a, const LaurentSeries& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("Laurent series over different fields");
}

}  // namespace

FieldPtr make_field(std::uint32_t q) { return std::make_shared<const FiniteField>(q); }

std::vector<Elem> mul_truncated(const FiniteField& f, const std::vector<Elem>& a, const std::vector<Elem>& b,
                                std::size_t n) {
  std::vector<Elem> r(std::min(n, a.empty() || b.empty() ? 0 : a.size() + b.size() - 1), 0);
  for (std::size_t i = 0; i < a.size() && i < r.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < r.size(); ++j) {
      if (b[j] != 0) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
  }
  return r;
}

std::vector<Elem> inverse_power_series(const FiniteField& f, const std::vector<Elem>& u, std::size_t n) {
  if (n == 0) return {};
  if (u.empty() || u[0] == 0) throw DivisionByZero("power series with zero constant term is not invertible");
  std::vector<Elem> b{f.inv(u[0])};
  std::size_t m = 1;
  while (m < n) {
    const std::size_t m2 = std::min(2 * m, n);
    // b <- b (2 - u b) mod t^m2
    std::vector<Elem> ub = mul_truncated(f, u, b, m2);
    ub.resize(m2, 0);
    for (auto& c : ub) c = f.neg(c);
    ub[0] = f.add(ub[0], f.add(f.one(), f.one()));
    b = mul_truncated(f, b, ub, m2);
    b.resize(m2, 0);
    m = m2;
  }
  return b;
}

LaurentSeries::LaurentSeries(FieldPtr field, int precision)
    : field_(std::move(field)), valuation_(clamp_precision(static_cast<long long>(precision) + 1)), precision_(precision) {}

LaurentSeries::LaurentSeries(FieldPtr field, int valuation, std::vector<Elem> coeffs, int precision)
    : field_(std::move(field)), valuation_(valuation), coeffs_(std::move(coeffs)), precision_(precision) {
  for (auto c : coeffs_) {
    if (c >= field_->q()) throw std::invalid_argument("Laurent coefficient outside the field");
  }
  normalize();
}

LaurentSeries LaurentSeries::one(FieldPtr field, int precision) {
  return LaurentSeries(std::move(field), 0, {1}, precision);
}

LaurentSeries LaurentSeries::monomial(FieldPtr field, Elem c, int exponent, int precision) {
  return LaurentSeries(std::move(field), exponent, {c}, precision);
}

LaurentSeries LaurentSeries::from_theta_poly(FieldPtr field, const std::vector<Elem>& coeffs) {
  // theta^i = t^-i
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg < 0) return zero(std::move(field), kExact);
  std::vector<Elem> c(coeffs.rbegin(), coeffs.rend());
  return LaurentSeries(std::move(field), -deg, std::move(c), kExact);
}

void LaurentSeries::normalize() {
  const long long span = static_cast<long long>(precision_) - valuation_ + 1;
  if (span <= 0) {
    coeffs_.clear();
  } else if (static_cast<long long>(coeffs_.size()) > span) {
    coeffs_.resize(static_cast<std::size_t>(span));
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  const auto lead = std::find_if(coeffs_.begin(), coeffs_.end(), [](Elem c) { return c != 0; });
  valuation_ += static_cast<int>(lead - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), lead);
  if (coeffs_.empty()) valuation_ = clamp_precision(static_cast<long long>(precision_) + 1);
}

LaurentSeries::Elem LaurentSeries::coeff(int k) const {
  if (k > precision_) throw std::out_of_range("coefficient beyond the known precision");
  if (k < valuation_ || k - valuation_ >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k - valuation_)];
}

LaurentSeries LaurentSeries::truncated(int precision) const {
  LaurentSeries r = *this;
  r.precision_ = std::min(precision, precision_);
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::operator-() const { return scaled(field_->neg(1)); }

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  check_same_field(*this, o);
  const int prec = std::min(precision_, o.precision_);
  if (o.is_zero()) {
    precision_ = prec;
    normalize();
    return *this;
  }
  if (is_zero()) {
    const int keep = prec;
    *this = o;
    precision_ = keep;
    normalize();
    return *this;
  }
  const int lo = std::min(valuation_, o.valuation_);
  const long long hi = std::min<long long>(
      prec, std::max<long long>(valuation_ + static_cast<long long>(coeffs_.size()),
                                o.valuation_ + static_cast<long long>(o.coeffs_.size())) - 1);
  std::vector<Elem> c(hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const long long e = valuation_ + static_cast<long long>(k) - lo;
    if (e < static_cast<long long>(c.size())) c[e] = coeffs_[k];
  }
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
    const long long e = o.valuation_ + static_cast<long long>(k) - lo;
    if (e < static_cast<long long>(c.size())) c[e] = field_->add(c[e], o.coeffs_[k]);
  }
  valuation_ = lo;
  coeffs_ = std::move(c);
  precision_ = prec;
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  check_same_field(a, b);
  const long long pa = a.precision_, pb = b.precision_;
  const long long prec = std::min(b.is_exact() ? LaurentSeries::kExact : a.valuation_ + pb,
                                  a.is_exact() ? LaurentSeries::kExact : b.valuation_ + pa);
  const int p = clamp_precision(prec);
  if (a.is_zero() || b.is_zero()) return LaurentSeries(a.field_, p);
  const long long v = static_cast<long long>(a.valuation_) + b.valuation_;
  const long long span = std::min<long long>(static_cast<long long>(a.coeffs_.size() + b.coeffs_.size()) - 1,
                                             static_cast<long long>(p) - v + 1);
  if (span <= 0) return LaurentSeries(a.field_, p);
  std::vector<Elem> c = mul_truncated(*a.field_, a.coeffs_, b.coeffs_, static_cast<std::size_t>(span));
  return LaurentSeries(a.field_, static_cast<int>(v), std::move(c), p);
}

LaurentSeries LaurentSeries::scaled(Elem c) const {
  LaurentSeries r = *this;
  for (auto& x : r.coeffs_) x = field_->mul(x, c);
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::inverse(int precision) const {
  if (is_zero()) throw DivisionByZero("inverse of a series that vanishes to its precision");
  const long long v = valuation_;
  const long long relative = is_exact() ? LaurentSeries::kExact : precision_ - v;
  const long long p = std::min<long long>(precision, -v + relative);
  if (p >= LaurentSeries::kExact) throw std::invalid_argument("inverse of an exact series needs a target precision");
  const long long n = p + v + 1;
  if (n <= 0) return LaurentSeries(field_, clamp_precision(p));
  std::vector<Elem> u = coeffs_;
  u.resize(static_cast<std::size_t>(n), 0);
  return LaurentSeries(field_, static_cast<int>(-v), inverse_power_series(*field_, u, static_cast<std::size_t>(n)),
                       clamp_precision(p));
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  return a.field() == b.field() && a.precision_ == b.precision_ && a.valuation_ == b.valuation_ &&
         a.coeffs_ == b.coeffs_;
}

std::string LaurentSeries::to_string() const {
  const auto power = [](long long theta_exp) {
    return theta_exp == 1 ? std::string("t") : "t^" + std::to_string(theta_exp);
  };
  std::string s;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Elem c = coeffs_[k];
    if (c == 0) continue;
    const long long e = -(static_cast<long long>(valuation_) + static_cast<long long>(k));
    if (!s.empty()) s += " + ";
    if (e == 0) {
      s += field_->to_string(c);
    } else {
      s += (c == 1 ? "" : field_->to_string(c) + "*") + power(e);
    }
  }
  if (!is_exact()) {
    if (!s.empty()) s += " + ";
    s += "O(" + power(-(static_cast<long long>(precision_) + 1)) + ")";
  }
  return s.empty() ? "0" : s;
}

nlohmann::json LaurentSeries::to_json() const {
  nlohmann::json c = nlohmann::json::array();
  for (const Elem x : coeffs_) {
    if (field_->degree() == 1) {
      c.push_back(x);
    } else {
      c.push_back(field_->coeffs(x));
    }
  }
  nlohmann::json j{{"valuation", valuation_}, {"coeffs", c}};
  j["precision"] = is_exact() ? nlohmann::json(nullptr) : nlohmann::json(precision_);
  return j;
}

}  // namespace qshuffle
