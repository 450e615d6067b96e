#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fftp {

using Limb = std::uint64_t;
inline constexpr unsigned kLimbBits = 64;

// Arbitrary-precision natural number. Limbs are little-endian and the
// representation is canonical: no trailing zero limb, zero has no limbs.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  static Natural from_limbs(std::vector<Limb> limbs);
  static Natural from_hex(std::string_view hex);
  static Natural from_decimal(std::string_view digits);
  static Natural pow2(std::size_t exponent);

  std::string to_hex() const;
  std::string to_decimal() const;

  bool is_zero() const { return limbs_.empty(); }
  bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1U); }
  std::size_t bit_length() const;
  std::size_t limb_count() const { return limbs_.size(); }
  std::span<const Limb> limbs() const { return limbs_; }
  bool bit(std::size_t index) const;

  bool fits_u64() const { return limbs_.size() <= 1; }
  // Low 64 bits.
  std::uint64_t low_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }

  // floor(x / 2^lo) mod 2^width
  Natural bitslice(std::size_t lo, std::size_t width) const;

  // Remainder by a single word; divisor must be nonzero.
  std::uint64_t mod_u64(std::uint64_t divisor) const;

  Natural& operator+=(const Natural& other);
  Natural& operator-=(const Natural& other);
  Natural& operator*=(const Natural& other);
  Natural& operator<<=(std::size_t bits);
  Natural& operator>>=(std::size_t bits);

  // Adds other * 2^bit_offset in place.
  void add_shifted(const Natural& other, std::size_t bit_offset);

  friend bool operator==(const Natural&, const Natural&) = default;
  friend std::strong_ordering operator<=>(const Natural& x, const Natural& y);

 private:
  explicit Natural(std::vector<Limb> limbs) : limbs_(std::move(limbs)) {
    normalize();
  }
  void normalize();

  std::vector<Limb> limbs_;

  friend class SignedInt;
  friend Natural mul_oracle(const Natural&, const Natural&);
  friend Natural mul_karatsuba(const Natural&, const Natural&, std::size_t);
  friend std::pair<Natural, Natural> divmod(const Natural&, const Natural&);
};

int cmp(const Natural& x, const Natural& y);
Natural add(const Natural& x, const Natural& y);
// Throws std::underflow_error when x < y.
Natural sub(const Natural& x, const Natural& y);

// Schoolbook product. Kept free of any code shared with the transform-based
// multipliers so it can serve as their reference.
Natural mul_oracle(const Natural& x, const Natural& y);

inline constexpr std::size_t kDefaultKaratsubaCutoff = 32;
Natural mul_karatsuba(const Natural& x, const Natural& y,
                      std::size_t cutoff_limbs = kDefaultKaratsubaCutoff);

// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<Natural, Natural> divmod(const Natural& x, const Natural& y);

Natural pow(const Natural& base, std::uint64_t exponent);
Natural gcd(Natural x, Natural y);

inline Natural operator+(Natural x, const Natural& y) { return x += y; }
inline Natural operator-(Natural x, const Natural& y) { return x -= y; }
inline Natural operator*(const Natural& x, const Natural& y) {
  return mul_karatsuba(x, y);
}
inline Natural operator/(const Natural& x, const Natural& y) {
  return divmod(x, y).first;
}
inline Natural operator%(const Natural& x, const Natural& y) {
  return divmod(x, y).second;
}
inline Natural operator<<(Natural x, std::size_t bits) { return x <<= bits; }
inline Natural operator>>(Natural x, std::size_t bits) { return x >>= bits; }

// Signed integer: sign in {-1, 0, +1} and a magnitude; sign is 0 exactly
// when the magnitude is zero.
class SignedInt {
 public:
  SignedInt() = default;
  SignedInt(std::int64_t value);  // NOLINT(google-explicit-constructor)
  SignedInt(Natural magnitude, int sign = 1);

  int sign() const { return sign_; }
  const Natural& magnitude() const { return magnitude_; }
  bool is_zero() const { return sign_ == 0; }

  SignedInt operator-() const;
  SignedInt& operator+=(const SignedInt& other);
  SignedInt& operator-=(const SignedInt& other);
  SignedInt& operator*=(const SignedInt& other);

  // Least nonnegative residue modulo a nonzero modulus.
  Natural mod(const Natural& modulus) const;

  std::string to_decimal() const;

  friend bool operator==(const SignedInt&, const SignedInt&) = default;
  friend std::strong_ordering operator<=>(const SignedInt& x,
                                          const SignedInt& y);

 private:
  int sign_ = 0;
  Natural magnitude_;
};

int cmp(const SignedInt& x, const SignedInt& y);
SignedInt add(const SignedInt& x, const SignedInt& y);
SignedInt sub(const SignedInt& x, const SignedInt& y);

inline SignedInt operator+(SignedInt x, const SignedInt& y) { return x += y; }
inline SignedInt operator-(SignedInt x, const SignedInt& y) { return x -= y; }
inline SignedInt operator*(SignedInt x, const SignedInt& y) { return x *= y; }

// Ceiling base-2 logarithm: lg(1) = 0, lg(x) is the least e with 2^e >= x.
std::size_t lg(std::uint64_t x);
std::size_t lg(const Natural& x);

}  // namespace fftp
