#include "vallab/bigfixed.hpp"

#include <algorithm>
#include <cmath>

namespace vallab {

namespace {
using u64 = uint64_t;
using u128 = unsigned __int128;
}  // namespace

int BigFixed::frac_limbs_for_digits(int decimal_digits) {
  // 64 bits per limb, ~19.27 digits per limb, plus two guard limbs.
  return (decimal_digits * 10) / 192 + 3;
}

BigFixed BigFixed::make(int frac) {
  BigFixed x;
  x.frac_ = frac;
  x.mag_.assign(static_cast<size_t>(frac + kIntLimbs), 0);
  return x;
}

BigFixed BigFixed::zero(int frac) { return make(frac); }

void BigFixed::normalize_sign() {
  for (u64 v : mag_)
    if (v != 0) return;
  sign_ = 0;
}

BigFixed BigFixed::from_double(double x, int frac) {
  BigFixed r = make(frac);
  if (x == 0.0) return r;
  r.sign_ = x < 0 ? -1 : 1;
  double a = std::fabs(x);
  int exp = 0;
  double m = std::frexp(a, &exp);  // a = m * 2^exp, m in [0.5, 1)
  // 53-bit mantissa as integer.
  u64 mant = static_cast<u64>(std::ldexp(m, 53));
  exp -= 53;
  long long bitpos = static_cast<long long>(64) * frac + exp;
  if (bitpos < -1) return make(frac);  // underflow to zero
  for (int b = 0; b < 64; ++b) {
    if (!(mant >> b & 1)) continue;
    long long p = bitpos + b;
    if (p < 0) continue;
    size_t limb = static_cast<size_t>(p / 64);
    if (limb >= r.mag_.size())
      fail(ErrorCode::PrecisionTooLow, "fixed-point overflow in from_double");
    r.mag_[limb] |= (u64{1} << (p % 64));
  }
  r.normalize_sign();
  return r;
}

BigFixed BigFixed::from_int64(long long v, int frac) {
  BigFixed r = make(frac);
  if (v == 0) return r;
  r.sign_ = v < 0 ? -1 : 1;
  u64 a = v < 0 ? ~static_cast<u64>(v) + 1 : static_cast<u64>(v);
  r.mag_[static_cast<size_t>(frac)] = a;
  return r;
}

double BigFixed::to_double() const {
  double r = 0.0;
  for (size_t i = mag_.size(); i-- > 0;) {
    r = r * 18446744073709551616.0 + static_cast<double>(mag_[i]);
  }
  r = std::ldexp(r, -64 * frac_);
  return sign_ < 0 ? -r : r;
}

int BigFixed::cmp_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

void BigFixed::add_mag(std::vector<u64>& a, const std::vector<u64>& b) {
  u64 carry = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    u128 s = static_cast<u128>(a[i]) + b[i] + carry;
    a[i] = static_cast<u64>(s);
    carry = static_cast<u64>(s >> 64);
  }
  if (carry) fail(ErrorCode::PrecisionTooLow, "fixed-point overflow in add");
}

void BigFixed::sub_mag(std::vector<u64>& a, const std::vector<u64>& b) {
  u64 borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    u128 s = static_cast<u128>(a[i]) - b[i] - borrow;
    a[i] = static_cast<u64>(s);
    borrow = (s >> 64) ? 1 : 0;
  }
}

BigFixed operator+(const BigFixed& a, const BigFixed& b) {
  BigFixed r = a;
  if (b.sign_ == 0) return r;
  if (r.sign_ == 0) return b;
  if (r.sign_ == b.sign_) {
    BigFixed::add_mag(r.mag_, b.mag_);
    return r;
  }
  int c = BigFixed::cmp_mag(r.mag_, b.mag_);
  if (c == 0) return BigFixed::zero(a.frac_);
  if (c > 0) {
    BigFixed::sub_mag(r.mag_, b.mag_);
  } else {
    BigFixed t = b;
    BigFixed::sub_mag(t.mag_, r.mag_);
    return t;
  }
  return r;
}

BigFixed operator-(const BigFixed& a, const BigFixed& b) { return a + (-b); }

BigFixed BigFixed::operator-() const {
  BigFixed r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigFixed BigFixed::abs() const {
  BigFixed r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigFixed operator*(const BigFixed& a, const BigFixed& b) {
  int frac = a.frac_;
  BigFixed r = BigFixed::make(frac);
  if (a.sign_ == 0 || b.sign_ == 0) return r;
  size_t n = a.mag_.size();
  std::vector<u64> prod(2 * n, 0);
  for (size_t i = 0; i < n; ++i) {
    if (a.mag_[i] == 0) continue;
    u64 carry = 0;
    for (size_t j = 0; j < n; ++j) {
      u128 cur = static_cast<u128>(a.mag_[i]) * b.mag_[j] + prod[i + j] + carry;
      prod[i + j] = static_cast<u64>(cur);
      carry = static_cast<u64>(cur >> 64);
    }
    size_t k = i + n;
    while (carry) {
      u128 cur = static_cast<u128>(prod[k]) + carry;
      prod[k] = static_cast<u64>(cur);
      carry = static_cast<u64>(cur >> 64);
      ++k;
    }
  }
  // Result = prod >> (64 * frac); top limbs above the window must vanish.
  for (size_t i = n + static_cast<size_t>(frac); i < 2 * n; ++i) {
    if (prod[i] != 0)
      fail(ErrorCode::PrecisionTooLow, "fixed-point overflow in mul");
  }
  for (size_t i = 0; i < n; ++i) r.mag_[i] = prod[i + static_cast<size_t>(frac)];
  r.sign_ = a.sign_ * b.sign_;
  r.normalize_sign();
  return r;
}

BigFixed BigFixed::mul_int(long long k) const {
  if (k == 0 || sign_ == 0) return make(frac_);
  u64 a = k < 0 ? ~static_cast<u64>(k) + 1 : static_cast<u64>(k);
  BigFixed r = make(frac_);
  u64 carry = 0;
  for (size_t i = 0; i < mag_.size(); ++i) {
    u128 cur = static_cast<u128>(mag_[i]) * a + carry;
    r.mag_[i] = static_cast<u64>(cur);
    carry = static_cast<u64>(cur >> 64);
  }
  if (carry) fail(ErrorCode::PrecisionTooLow, "fixed-point overflow in mul_int");
  r.sign_ = (k < 0) ? -sign_ : sign_;
  r.normalize_sign();
  return r;
}

BigFixed BigFixed::div_uint(uint64_t k) const {
  if (k == 0) fail(ErrorCode::ValidationError, "division by zero");
  BigFixed r = make(frac_);
  u64 rem = 0;
  for (size_t i = mag_.size(); i-- > 0;) {
    u128 cur = (static_cast<u128>(rem) << 64) | mag_[i];
    r.mag_[i] = static_cast<u64>(cur / k);
    rem = static_cast<u64>(cur % k);
  }
  r.sign_ = sign_;
  r.normalize_sign();
  return r;
}

BigFixed operator/(const BigFixed& a, const BigFixed& b) {
  if (b.sign_ == 0) fail(ErrorCode::ValidationError, "division by zero");
  int frac = a.frac_;
  size_t n = a.mag_.size();
  BigFixed r = BigFixed::make(frac);
  if (a.sign_ == 0) return r;

  // Numerator = |a| << 64*frac, then restoring binary long division by |b|.
  size_t nn = n + static_cast<size_t>(frac);
  std::vector<u64> num(nn, 0);
  for (size_t i = 0; i < n; ++i) num[i + static_cast<size_t>(frac)] = a.mag_[i];
  size_t topb = 0;
  for (size_t i = nn; i-- > 0;) {
    if (num[i]) {
      topb = i * 64 + (63 - static_cast<size_t>(__builtin_clzll(num[i]))) + 1;
      break;
    }
  }
  std::vector<u64> rem(n + 1, 0), quo(nn, 0);
  auto rem_cmp_b = [&]() {
    if (rem[n] != 0) return 1;
    for (size_t i = n; i-- > 0;) {
      if (rem[i] != b.mag_[i]) return rem[i] < b.mag_[i] ? -1 : 1;
    }
    return 0;
  };
  for (size_t bit = topb; bit-- > 0;) {
    // rem = (rem << 1) | num_bit
    u64 carry = (num[bit / 64] >> (bit % 64)) & 1;
    for (size_t i = 0; i <= n; ++i) {
      u64 nxt = rem[i] >> 63;
      rem[i] = (rem[i] << 1) | carry;
      carry = nxt;
    }
    if (rem_cmp_b() >= 0) {
      u64 borrow = 0;
      for (size_t i = 0; i < n; ++i) {
        u128 s = static_cast<u128>(rem[i]) - b.mag_[i] - borrow;
        rem[i] = static_cast<u64>(s);
        borrow = (s >> 64) ? 1 : 0;
      }
      rem[n] -= borrow;
      quo[bit / 64] |= (u64{1} << (bit % 64));
    }
  }
  for (size_t i = n; i < nn; ++i) {
    if (quo[i] != 0)
      fail(ErrorCode::PrecisionTooLow, "fixed-point overflow in div");
  }
  for (size_t i = 0; i < n; ++i) r.mag_[i] = quo[i];
  r.sign_ = a.sign_ * b.sign_;
  r.normalize_sign();
  return r;
}

int BigFixed::compare(const BigFixed& a, const BigFixed& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  if (a.sign_ == 0) return 0;
  int c = cmp_mag(a.mag_, b.mag_);
  return a.sign_ > 0 ? c : -c;
}

long long BigFixed::floor64(bool* ok) const {
  if (ok) *ok = true;
  long long ip = 0;
  bool fits = mag_.size() >= static_cast<size_t>(frac_) + 1;
  for (size_t i = static_cast<size_t>(frac_) + 1; i < mag_.size(); ++i)
    if (mag_[i] != 0) fits = false;
  u64 head = mag_[static_cast<size_t>(frac_)];
  if (head > 0x7fffffffffffffffULL) fits = false;
  if (!fits) {
    if (ok) *ok = false;
    return 0;
  }
  ip = static_cast<long long>(head);
  if (sign_ >= 0) return ip;
  // Negative: floor = -(ip) - (frac bits nonzero ? 1 : 0)
  bool has_frac = false;
  for (int i = 0; i < frac_; ++i)
    if (mag_[static_cast<size_t>(i)] != 0) has_frac = true;
  return -ip - (has_frac ? 1 : 0);
}

long long BigFixed::nint64(bool* ok) const {
  BigFixed half = from_int64(1, frac_).div_uint(2);
  BigFixed shifted = *this + half;
  return shifted.floor64(ok);
}

BigFixed BigFixed::frac_part() const {
  bool ok = true;
  long long f = floor64(&ok);
  if (!ok) fail(ErrorCode::PrecisionTooLow, "frac_part: integer part too large");
  return *this - from_int64(f, frac_);
}

BigFixed BigFixed::pow10_neg(int k, int frac) {
  BigFixed r = from_int64(1, frac);
  for (int i = 0; i < k; ++i) r = r.div_uint(10);
  return r;
}

BigFixed BigFixed::sqrt(const BigFixed& a) {
  if (a.sign_ < 0) fail(ErrorCode::ValidationError, "sqrt of negative value");
  if (a.sign_ == 0) return zero(a.frac_);
  int frac = a.frac_;
  double seed = std::sqrt(a.to_double());
  if (!(seed > 0.0)) seed = 1.0;
  BigFixed x = from_double(seed, frac);
  // Newton: x <- (x + a/x) / 2; quadratic convergence from a 53-bit seed.
  int iters = 3;
  for (int bits = 53; bits < 64 * frac; bits *= 2) ++iters;
  for (int i = 0; i < iters; ++i) x = (x + a / x).div_uint(2);
  return x;
}

BigFixed BigFixed::pi(int frac) {
  // Machin: pi = 16 atan(1/5) - 4 atan(1/239), series in integer reciprocals.
  auto atan_inv = [&](u64 k) {
    BigFixed term = from_int64(1, frac).div_uint(k);
    BigFixed sum = term;
    u64 k2 = k * k;
    int i = 1;
    for (;;) {
      term = term.div_uint(k2);
      BigFixed inc = term.div_uint(static_cast<u64>(2 * i + 1));
      if (inc.is_zero()) break;
      if (i % 2 == 1)
        sum = sum - inc;
      else
        sum = sum + inc;
      ++i;
      if (i > 64 * frac) break;
    }
    return sum;
  };
  return atan_inv(5).mul_int(16) - atan_inv(239).mul_int(4);
}

BigFixed BigFixed::atan(const BigFixed& x) {
  int frac = x.frac_;
  if (x.sign_ == 0) return zero(frac);
  if (x.sign_ < 0) return -atan(-x);
  BigFixed one = from_int64(1, frac);
  if (compare(x, one) > 0) {
    // atan(x) = pi/2 - atan(1/x)
    return pi(frac).div_uint(2) - atan(one / x);
  }
  // Halve the angle until the argument is small: atan(x) = 2 atan(x / (1 + sqrt(1+x^2))).
  BigFixed quarter = one.div_uint(4);
  BigFixed y = x;
  int halvings = 0;
  while (compare(y, quarter) > 0) {
    y = y / (one + sqrt(one + y * y));
    ++halvings;
  }
  // Taylor series.
  BigFixed y2 = y * y;
  BigFixed term = y;
  BigFixed sum = y;
  int i = 1;
  for (;;) {
    term = term * y2;
    BigFixed inc = term.div_uint(static_cast<u64>(2 * i + 1));
    if (inc.is_zero()) break;
    if (i % 2 == 1)
      sum = sum - inc;
    else
      sum = sum + inc;
    ++i;
    if (i > 64 * frac) break;
  }
  return sum.mul_int(1LL << halvings);
}

BigFixed BigFixed::acos(const BigFixed& x) {
  int frac = x.frac_;
  BigFixed one = from_int64(1, frac);
  if (compare(x.abs(), one) > 0)
    fail(ErrorCode::ValidationError, "acos argument out of range");
  if (x.sign_ == 0) return pi(frac).div_uint(2);
  if (x.sign_ < 0) return pi(frac) - acos(-x);
  if (compare(x, one) == 0) return zero(frac);
  BigFixed s = sqrt(one - x * x);
  return atan(s / x);
}

std::string BigFixed::to_string(int digits) const {
  std::string out = sign_ < 0 ? "-" : "";
  bool ok = true;
  BigFixed a = abs();
  long long ip = a.floor64(&ok);
  out += ok ? std::to_string(ip) : std::string("<big>");
  out += ".";
  BigFixed f = a.frac_part();
  for (int i = 0; i < digits; ++i) {
    f = f.mul_int(10);
    long long d = f.floor64(&ok);
    if (!ok) break;
    out += static_cast<char>('0' + d);
    f = f - from_int64(d, frac_);
  }
  return out;
}

}  // namespace vallab
