#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mmk::codec {

// Arbitrary-precision natural number. Little-endian 32-bit limbs, no sign.
// Only the operations the prime-power codec needs: add, multiply, integer
// power, and division by a single-limb divisor (trial division, decimal I/O).
class Natural {
public:
  Natural() = default;
  explicit Natural(std::uint64_t v);

  // Throws std::invalid_argument on anything but a nonempty digit string.
  static Natural from_decimal(std::string_view s);
  std::string to_decimal() const;

  bool is_zero() const { return limbs_.empty(); }
  bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }
  bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }
  bool is_even() const { return !is_odd(); }
  std::size_t bit_length() const;

  bool fits_uint64() const { return limbs_.size() <= 2; }
  std::uint64_t to_uint64() const;  // throws std::overflow_error if it does not fit

  Natural& operator+=(const Natural& rhs);
  friend Natural operator+(Natural a, const Natural& b) {
    a += b;
    return a;
  }
  Natural operator*(const Natural& rhs) const;
  Natural& operator*=(const Natural& rhs) {
    *this = *this * rhs;
    return *this;
  }
  Natural& mul_small(std::uint32_t m);
  Natural& add_small(std::uint32_t a);

  // In-place quotient; returns the remainder. d must be nonzero.
  std::uint32_t divmod_small(std::uint32_t d);

  static Natural pow(const Natural& base, std::uint64_t exp);

  int compare(const Natural& rhs) const;
  bool operator==(const Natural& rhs) const { return limbs_ == rhs.limbs_; }
  bool operator!=(const Natural& rhs) const { return limbs_ != rhs.limbs_; }
  bool operator<(const Natural& rhs) const { return compare(rhs) < 0; }
  bool operator<=(const Natural& rhs) const { return compare(rhs) <= 0; }
  bool operator>(const Natural& rhs) const { return compare(rhs) > 0; }
  bool operator>=(const Natural& rhs) const { return compare(rhs) >= 0; }

private:
  std::vector<std::uint32_t> limbs_;
  void trim();
};

}  // namespace mmk::codec
