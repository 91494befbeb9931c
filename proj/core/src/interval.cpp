#include "gpade/interval.hpp"

#include <algorithm>
#include <cstdlib>

#include "gpade/error.hpp"

namespace gpade {

namespace {

// Scratch value with RAII cleanup.
struct Scratch {
  explicit Scratch(long prec) { mpfr_init2(v, prec); }
  ~Scratch() { mpfr_clear(v); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_t v;
};

std::string format(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
  char* buf = nullptr;
  if (rnd == MPFR_RNDD) {
    mpfr_asprintf(&buf, "%.*RDg", digits, x);
  } else {
    mpfr_asprintf(&buf, "%.*RUg", digits, x);
  }
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

}  // namespace

void Interval::init() {
  mpfr_init2(lo_, precision_);
  mpfr_init2(hi_, precision_);
}

Interval::Interval() : Interval(0L) {}

Interval Interval::zero(long precision) { return Interval(0L, precision); }

Interval::Interval(Uninitialized, long precision) : precision_(precision) {
  init();
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& value, long precision) : precision_(precision) {
  init();
  mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Integer& value, long precision) : precision_(precision) {
  init();
  mpfr_set_z(lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_, value.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(long value, long precision) : precision_(precision) {
  init();
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval::Interval(const Interval& other) : precision_(other.precision_) {
  init();
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : precision_(other.precision_) {
  mpfr_init2(lo_, MPFR_PREC_MIN);
  mpfr_init2(hi_, MPFR_PREC_MIN);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    precision_ = other.precision_;
    mpfr_set_prec(lo_, precision_);
    mpfr_set_prec(hi_, precision_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  if (this != &other) {
    std::swap(precision_, other.precision_);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }
  return *this;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r(Interval::Uninitialized{}, std::max(a.precision_, b.precision_));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::log2_constant(long precision) {
  Interval r(Interval::Uninitialized{}, precision);
  mpfr_const_log2(r.lo_, MPFR_RNDD);
  mpfr_const_log2(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-() const {
  Interval r(Interval::Uninitialized{}, precision_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval& Interval::operator+=(const Interval& rhs) {
  mpfr_add(lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, rhs.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator-=(const Interval& rhs) {
  Scratch lo(precision_), hi(precision_);
  mpfr_sub(lo.v, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(hi.v, hi_, rhs.lo_, MPFR_RNDU);
  mpfr_swap(lo_, lo.v);
  mpfr_swap(hi_, hi.v);
  return *this;
}

Interval& Interval::operator*=(const Interval& rhs) {
  mpfr_srcptr xs[2] = {lo_, hi_};
  mpfr_srcptr ys[2] = {rhs.lo_, rhs.hi_};
  Scratch lo(precision_), hi(precision_), t(precision_);
  mpfr_set_inf(lo.v, 1);
  mpfr_set_inf(hi.v, -1);
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_mul(t.v, x, y, MPFR_RNDD);
      mpfr_min(lo.v, lo.v, t.v, MPFR_RNDD);
      mpfr_mul(t.v, x, y, MPFR_RNDU);
      mpfr_max(hi.v, hi.v, t.v, MPFR_RNDU);
    }
  }
  mpfr_swap(lo_, lo.v);
  mpfr_swap(hi_, hi.v);
  return *this;
}

Interval& Interval::operator/=(const Interval& rhs) {
  if (rhs.contains_zero()) throw Error(ErrorCode::InvalidArgument, "interval division by zero");
  mpfr_srcptr xs[2] = {lo_, hi_};
  mpfr_srcptr ys[2] = {rhs.lo_, rhs.hi_};
  Scratch lo(precision_), hi(precision_), t(precision_);
  mpfr_set_inf(lo.v, 1);
  mpfr_set_inf(hi.v, -1);
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_div(t.v, x, y, MPFR_RNDD);
      mpfr_min(lo.v, lo.v, t.v, MPFR_RNDD);
      mpfr_div(t.v, x, y, MPFR_RNDU);
      mpfr_max(hi.v, hi.v, t.v, MPFR_RNDU);
    }
  }
  mpfr_swap(lo_, lo.v);
  mpfr_swap(hi_, hi.v);
  return *this;
}

Interval log(const Interval& x) {
  if (mpfr_sgn(x.lo_) <= 0) throw Error(ErrorCode::InvalidArgument, "log of a non-positive interval");
  Interval r(Interval::Uninitialized{}, x.precision_);
  mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval exp(const Interval& x) {
  Interval r(Interval::Uninitialized{}, x.precision_);
  mpfr_exp(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval sqrt(const Interval& x) { return root(x, 2); }

Interval root(const Interval& x, unsigned long k) {
  if (mpfr_sgn(x.lo_) < 0) throw Error(ErrorCode::InvalidArgument, "root of a negative interval");
  Interval r(Interval::Uninitialized{}, x.precision_);
  mpfr_rootn_ui(r.lo_, x.lo_, k, MPFR_RNDD);
  mpfr_rootn_ui(r.hi_, x.hi_, k, MPFR_RNDU);
  return r;
}

Interval pow(const Interval& x, const Rational& e) {
  if (e == 0) return Interval(1L, x.precision_);
  if (mpfr_sgn(x.lo_) <= 0) throw Error(ErrorCode::InvalidArgument, "pow of a non-positive interval");
  if (e.get_den() == 1 && e > 0 && mpz_fits_ulong_p(e.get_num_mpz_t())) {
    return pow(x, mpz_get_ui(e.get_num_mpz_t()));
  }
  return exp(Interval(e, x.precision_) * log(x));
}

Interval pow(const Interval& x, unsigned long e) {
  if (mpfr_sgn(x.lo_) >= 0) {
    Interval r(Interval::Uninitialized{}, x.precision_);
    mpfr_pow_ui(r.lo_, x.lo_, e, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, x.hi_, e, MPFR_RNDU);
    return r;
  }
  Interval result(1L, x.precision_);
  Interval base = x;
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r(Interval::Uninitialized{}, std::max(a.precision_, b.precision_));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval min(const Interval& a, const Interval& b) {
  Interval r(Interval::Uninitialized{}, std::max(a.precision_, b.precision_));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval abs(const Interval& x) {
  if (mpfr_sgn(x.lo_) >= 0) return x;
  if (mpfr_sgn(x.hi_) <= 0) return -x;
  Interval r(Interval::Uninitialized{}, x.precision_);
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, x.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

bool certainly_le(const Interval& a, const Interval& b) { return mpfr_lessequal_p(a.hi_, b.lo_) != 0; }
bool certainly_lt(const Interval& a, const Interval& b) { return mpfr_less_p(a.hi_, b.lo_) != 0; }

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

std::optional<Integer> Interval::certain_floor() const {
  Integer a, b;
  mpfr_get_z(a.get_mpz_t(), lo_, MPFR_RNDD);
  mpfr_get_z(b.get_mpz_t(), hi_, MPFR_RNDD);
  if (a != b) return std::nullopt;
  return a;
}

std::optional<Integer> Interval::certain_ceil() const {
  Integer a, b;
  mpfr_get_z(a.get_mpz_t(), lo_, MPFR_RNDU);
  mpfr_get_z(b.get_mpz_t(), hi_, MPFR_RNDU);
  if (a != b) return std::nullopt;
  return a;
}

Integer Interval::floor_lower() const {
  Integer a;
  mpfr_get_z(a.get_mpz_t(), lo_, MPFR_RNDD);
  return a;
}

Integer Interval::ceil_upper() const {
  Integer a;
  mpfr_get_z(a.get_mpz_t(), hi_, MPFR_RNDU);
  return a;
}

double Interval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double Interval::mid_double() const { return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)); }

Interval Interval::width() const {
  Interval r(Interval::Uninitialized{}, precision_);
  mpfr_sub(r.lo_, hi_, lo_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
  return r;
}

std::string Interval::lower_string(int digits) const { return format(lo_, digits, MPFR_RNDD); }
std::string Interval::upper_string(int digits) const { return format(hi_, digits, MPFR_RNDU); }

}  // namespace gpade
