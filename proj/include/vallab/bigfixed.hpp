#ifndef VALLAB_BIGFIXED_HPP
#define VALLAB_BIGFIXED_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vallab/core.hpp"

namespace vallab {

// Sign-magnitude fixed-point number: value = sign * mag / 2^(64 * frac),
// with a fixed 4-limb integer headroom. All operands in an expression must
// share `frac`; precision is chosen once per computation from the requested
// decimal digit count. Schoolbook arithmetic throughout -- operand sizes stay
// tiny (a dozen limbs) for every use in this project.
class BigFixed {
 public:
  static constexpr int kIntLimbs = 4;

  BigFixed() = default;
  static int frac_limbs_for_digits(int decimal_digits);
  static BigFixed zero(int frac);
  static BigFixed from_double(double x, int frac);
  static BigFixed from_int64(long long v, int frac);
  static BigFixed pi(int frac);

  int frac() const { return frac_; }
  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  double to_double() const;
  // Decimal rendering with the given number of fractional digits.
  std::string to_string(int digits) const;

  BigFixed operator-() const;
  BigFixed abs() const;

  friend BigFixed operator+(const BigFixed& a, const BigFixed& b);
  friend BigFixed operator-(const BigFixed& a, const BigFixed& b);
  friend BigFixed operator*(const BigFixed& a, const BigFixed& b);
  friend BigFixed operator/(const BigFixed& a, const BigFixed& b);

  BigFixed mul_int(long long k) const;
  BigFixed div_uint(uint64_t k) const;

  // -1 / 0 / +1 comparison of signed values.
  static int compare(const BigFixed& a, const BigFixed& b);
  bool operator<(const BigFixed& o) const { return compare(*this, o) < 0; }
  bool operator>(const BigFixed& o) const { return compare(*this, o) > 0; }

  // Nearest integer; `ok` turns false if it does not fit in int64.
  long long nint64(bool* ok = nullptr) const;
  long long floor64(bool* ok = nullptr) const;
  BigFixed frac_part() const;  // x - floor(x), in [0, 1)

  static BigFixed sqrt(const BigFixed& a);
  static BigFixed atan(const BigFixed& x);
  static BigFixed acos(const BigFixed& x);
  // 10^-k at this precision (for tolerance thresholds).
  static BigFixed pow10_neg(int k, int frac);

 private:
  int sign_ = 0;
  int frac_ = 0;
  std::vector<uint64_t> mag_;  // little-endian, size = frac_ + kIntLimbs

  static BigFixed make(int frac);
  void normalize_sign();
  static int cmp_mag(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b);
  static void add_mag(std::vector<uint64_t>& a, const std::vector<uint64_t>& b);
  static void sub_mag(std::vector<uint64_t>& a, const std::vector<uint64_t>& b);
};

}  // namespace vallab

#endif  // VALLAB_BIGFIXED_HPP
