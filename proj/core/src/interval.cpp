#include "dquad/interval.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace dquad {

namespace {

// RAII scratch value for temporaries.
struct Scratch {
  mpfr_t v;
  explicit Scratch(mpfr_prec_t bits) { mpfr_init2(v, bits); }
  ~Scratch() { mpfr_clear(v); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
};

std::string format(const char* fmt, int digits, mpfr_srcptr value) {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, fmt, digits, value) < 0 || buf == nullptr) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

}  // namespace

mpfr_prec_t bits_for_digits(long digits) {
  if (digits < 1) throw std::invalid_argument("precision must be at least one digit");
  return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.321928094887362)) + 16;
}

Interval::Interval(mpfr_prec_t bits) : bits_(bits) {
  mpfr_init2(lo_, bits_);
  mpfr_init2(hi_, bits_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long value, mpfr_prec_t bits) : bits_(bits) {
  mpfr_init2(lo_, bits_);
  mpfr_init2(hi_, bits_);
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Interval::Interval(const BigInt& value, mpfr_prec_t bits) : bits_(bits) {
  mpfr_init2(lo_, bits_);
  mpfr_init2(hi_, bits_);
  mpfr_set_z(lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_, value.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& other) : bits_(other.bits_) {
  mpfr_init2(lo_, bits_);
  mpfr_init2(hi_, bits_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.bits_) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this == &other) return *this;
  bits_ = other.bits_;
  mpfr_set_prec(lo_, bits_);
  mpfr_set_prec(hi_, bits_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  if (this == &other) return *this;
  std::swap(bits_, other.bits_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::decimal(std::string_view literal, mpfr_prec_t bits) {
  Interval out(bits);
  const std::string text(literal);
  if (mpfr_set_str(out.lo_, text.c_str(), 10, MPFR_RNDD) != 0 ||
      mpfr_set_str(out.hi_, text.c_str(), 10, MPFR_RNDU) != 0) {
    // mpfr_set_str returns 0 on a fully parsed string, regardless of inexactness.
    throw std::invalid_argument("malformed decimal literal: " + text);
  }
  return out;
}

Interval Interval::ratio(const BigInt& num, const BigInt& den, mpfr_prec_t bits) {
  return Interval(num, bits) / Interval(den, bits);
}

Interval Interval::euler(mpfr_prec_t bits) { return exp(Interval(1L, bits)); }

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval out(std::max(a.bits_, b.bits_));
  mpfr_set(out.lo_, a.lo_, MPFR_RNDD);
  mpfr_set(out.hi_, b.hi_, MPFR_RNDU);
  if (mpfr_cmp(out.lo_, out.hi_) > 0) mpfr_swap(out.lo_, out.hi_);
  return out;
}

bool Interval::contains(const BigInt& value) const {
  return mpfr_cmp_z(lo_, value.get_mpz_t()) <= 0 && mpfr_cmp_z(hi_, value.get_mpz_t()) >= 0;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
bool Interval::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::certainly_negative() const { return mpfr_sgn(hi_) < 0; }
bool Interval::certainly_less(const Interval& other) const { return mpfr_less_p(hi_, other.lo_) != 0; }

std::optional<BigInt> Interval::exact_floor() const {
  BigInt a = floor_lower();
  BigInt b = floor_upper();
  if (a != b) return std::nullopt;
  return a;
}

BigInt Interval::floor_lower() const {
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), lo_, MPFR_RNDD);
  return out;
}

BigInt Interval::floor_upper() const {
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), hi_, MPFR_RNDD);
  return out;
}

BigInt Interval::ceil_upper() const {
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), hi_, MPFR_RNDU);
  return out;
}

std::optional<BigInt> Interval::nearest_integer() const {
  Scratch mid(bits_ + 2);
  mpfr_add(mid.v, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(mid.v, mid.v, 1, MPFR_RNDN);
  BigInt n;
  mpfr_get_z(n.get_mpz_t(), mid.v, MPFR_RNDN);
  Interval d = *this - Interval(n, bits_);
  if (mpfr_cmp_d(d.lo_, -0.5) > 0 && mpfr_cmp_d(d.hi_, 0.5) < 0) return n;
  return std::nullopt;
}

double Interval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double Interval::mid_double() const { return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)); }

Interval::Decimal Interval::to_decimal(int mid_digits) const {
  Scratch mid(bits_ + 2);
  mpfr_add(mid.v, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(mid.v, mid.v, 1, MPFR_RNDN);
  Decimal out;
  out.mid = format("%.*RNe", mid_digits - 1, mid.v);

  // Radius measured from the printed midpoint so the enclosure survives printing.
  Scratch printed(bits_ + 64);
  mpfr_set_str(printed.v, out.mid.c_str(), 10, MPFR_RNDN);
  Scratch up(bits_ + 64);
  Scratch down(bits_ + 64);
  mpfr_sub(up.v, hi_, printed.v, MPFR_RNDU);
  mpfr_sub(down.v, printed.v, lo_, MPFR_RNDU);
  mpfr_max(up.v, up.v, down.v, MPFR_RNDU);
  // The printed mid is RNDN-parsed; pad by one ulp of the parse.
  Scratch ulp(bits_ + 64);
  mpfr_set(ulp.v, printed.v, MPFR_RNDN);
  mpfr_abs(ulp.v, ulp.v, MPFR_RNDU);
  mpfr_div_2ui(ulp.v, ulp.v, static_cast<unsigned long>(bits_ + 63), MPFR_RNDU);
  mpfr_add(up.v, up.v, ulp.v, MPFR_RNDU);
  out.radius = format("%.*RUe", 2, up.v);
  return out;
}

std::string Interval::lower_string(int digits) const { return format("%.*RDe", digits - 1, lo_); }
std::string Interval::upper_string(int digits) const { return format("%.*RUe", digits - 1, hi_); }

Interval& Interval::operator+=(const Interval& rhs) {
  const Interval r = rhs;
  mpfr_add(lo_, lo_, r.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, r.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator-=(const Interval& rhs) {
  const Interval r = rhs;
  mpfr_sub(lo_, lo_, r.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, r.lo_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator*=(const Interval& rhs) {
  const Interval r = rhs;
  Scratch d1(bits_), d2(bits_), d3(bits_), d4(bits_);
  Scratch u1(bits_), u2(bits_), u3(bits_), u4(bits_);
  mpfr_mul(d1.v, lo_, r.lo_, MPFR_RNDD);
  mpfr_mul(d2.v, lo_, r.hi_, MPFR_RNDD);
  mpfr_mul(d3.v, hi_, r.lo_, MPFR_RNDD);
  mpfr_mul(d4.v, hi_, r.hi_, MPFR_RNDD);
  mpfr_mul(u1.v, lo_, r.lo_, MPFR_RNDU);
  mpfr_mul(u2.v, lo_, r.hi_, MPFR_RNDU);
  mpfr_mul(u3.v, hi_, r.lo_, MPFR_RNDU);
  mpfr_mul(u4.v, hi_, r.hi_, MPFR_RNDU);
  mpfr_min(d1.v, d1.v, d2.v, MPFR_RNDD);
  mpfr_min(d3.v, d3.v, d4.v, MPFR_RNDD);
  mpfr_min(lo_, d1.v, d3.v, MPFR_RNDD);
  mpfr_max(u1.v, u1.v, u2.v, MPFR_RNDU);
  mpfr_max(u3.v, u3.v, u4.v, MPFR_RNDU);
  mpfr_max(hi_, u1.v, u3.v, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator/=(const Interval& rhs) {
  const Interval r = rhs;
  if (r.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
  Scratch d1(bits_), d2(bits_), d3(bits_), d4(bits_);
  Scratch u1(bits_), u2(bits_), u3(bits_), u4(bits_);
  mpfr_div(d1.v, lo_, r.lo_, MPFR_RNDD);
  mpfr_div(d2.v, lo_, r.hi_, MPFR_RNDD);
  mpfr_div(d3.v, hi_, r.lo_, MPFR_RNDD);
  mpfr_div(d4.v, hi_, r.hi_, MPFR_RNDD);
  mpfr_div(u1.v, lo_, r.lo_, MPFR_RNDU);
  mpfr_div(u2.v, lo_, r.hi_, MPFR_RNDU);
  mpfr_div(u3.v, hi_, r.lo_, MPFR_RNDU);
  mpfr_div(u4.v, hi_, r.hi_, MPFR_RNDU);
  mpfr_min(d1.v, d1.v, d2.v, MPFR_RNDD);
  mpfr_min(d3.v, d3.v, d4.v, MPFR_RNDD);
  mpfr_min(lo_, d1.v, d3.v, MPFR_RNDD);
  mpfr_max(u1.v, u1.v, u2.v, MPFR_RNDU);
  mpfr_max(u3.v, u3.v, u4.v, MPFR_RNDU);
  mpfr_max(hi_, u1.v, u3.v, MPFR_RNDU);
  return *this;
}

Interval Interval::operator-() const {
  Interval out(bits_);
  mpfr_neg(out.lo_, hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  return out;
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.lo_) < 0) throw std::domain_error("sqrt of an interval with negative part");
  Interval out(x.bits_);
  mpfr_sqrt(out.lo_, x.lo_, MPFR_RNDD);
  mpfr_sqrt(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

Interval log(const Interval& x) {
  if (mpfr_sgn(x.lo_) <= 0) throw std::domain_error("log of an interval not bounded away from zero");
  Interval out(x.bits_);
  mpfr_log(out.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

Interval exp(const Interval& x) {
  Interval out(x.bits_);
  mpfr_exp(out.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

Interval pow(const Interval& x, unsigned long exponent) {
  if (exponent == 0) return Interval(1L, x.bits_);
  const Interval base = (exponent % 2 == 0) ? abs(x) : x;
  // x^e is nondecreasing on the chosen domain.
  Interval out(x.bits_);
  mpfr_pow_ui(out.lo_, base.lo_, exponent, MPFR_RNDD);
  mpfr_pow_ui(out.hi_, base.hi_, exponent, MPFR_RNDU);
  return out;
}

Interval abs(const Interval& x) {
  if (mpfr_sgn(x.lo_) >= 0) return x;
  if (mpfr_sgn(x.hi_) <= 0) return -x;
  Interval out(x.bits_);
  mpfr_set_zero(out.lo_, 1);
  mpfr_neg(out.hi_, x.lo_, MPFR_RNDU);
  mpfr_max(out.hi_, out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

Interval min(const Interval& a, const Interval& b) {
  Interval out(std::max(a.bits_, b.bits_));
  mpfr_min(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval max(const Interval& a, const Interval& b) {
  Interval out(std::max(a.bits_, b.bits_));
  mpfr_max(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval dist_to_integer(const Interval& x) {
  const std::optional<BigInt> f = x.exact_floor();
  if (!f) {
    // An integer lies inside x.
    Interval width(x.bits_);
    mpfr_sub(width.hi_, x.hi_, x.lo_, MPFR_RNDU);
    return width;
  }
  const Interval below = x - Interval(*f, x.bits_);
  const Interval above = Interval(*f + 1, x.bits_) - x;
  return min(below, above);
}

}  // namespace dquad
