#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>

#include "fftp/bigint.hpp"
#include "fftp/montgomery.hpp"
#include "fftp/primes.hpp"

namespace fftp::fp {

// Field elements are stored inline; moduli up to 256 bits are supported.
inline constexpr std::size_t kMaxLimbs = 4;

// A residue in Montgomery form. Only meaningful together with the Field that
// produced it; Field::to_natural recovers the canonical value in [0, p).
struct Element {
  std::array<Limb, kMaxLimbs> limbs{};
  friend bool operator==(const Element&, const Element&) = default;
};

// Arithmetic in F_p for an FFT prime p = a * 2^m + 1. Immutable once built,
// so a single instance can be shared across threads.
class Field {
 public:
  // seed drives the randomized search for a generator of the order-2^m
  // subgroup.
  explicit Field(primes::FftPrime prime, std::uint64_t seed = 1);

  const primes::FftPrime& prime() const { return prime_; }
  const Natural& modulus() const { return prime_.p; }
  std::size_t width() const { return n_; }

  Element zero() const { return {}; }
  Element one() const { return one_; }
  Element from(const Natural& x) const;
  Element from_u64(std::uint64_t x) const;
  Element from_signed(const SignedInt& x) const;
  Natural to_natural(const Element& x) const;

  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  Element mul(const Element& x, const Element& y) const;
  Element pow(const Element& x, std::uint64_t e) const;
  Element pow(const Element& x, const Natural& e) const;
  // Throws std::domain_error for zero.
  Element inv(const Element& x) const;
  bool is_zero(const Element& x) const { return x == Element{}; }

  // The unique integer congruent to x in (-p/2, p/2).
  SignedInt balanced_lift(const Element& x) const;

  // zeta with zeta^order = 1 and zeta^(order/2) = -1; order must be a power
  // of two with lg(order) <= m.
  Element root_of_unity(std::uint64_t order) const;

  // A square root of x when x has order dividing 2^(m-1), else nullopt.
  std::optional<Element> sqrt_two_power(const Element& x) const;

 private:
  primes::FftPrime prime_;
  std::size_t n_;
  std::array<Limb, kMaxLimbs> p_{};
  Limb pinv_;
  Element r2_;
  Element one_;
  Element minus_one_;
  Element sylow_generator_;  // order exactly 2^m
};

// Field element bound to its field. Combining elements of different fields
// throws std::logic_error.
class FieldElement {
 public:
  FieldElement(std::shared_ptr<const Field> field, const Element& value)
      : field_(std::move(field)), value_(value) {}
  FieldElement(std::shared_ptr<const Field> field, std::uint64_t value)
      : field_(std::move(field)), value_(field_->from_u64(value)) {}

  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& context() const { return field_; }
  const Element& raw() const { return value_; }
  Natural value() const { return field_->to_natural(value_); }

  FieldElement operator+(const FieldElement& other) const;
  FieldElement operator-(const FieldElement& other) const;
  FieldElement operator*(const FieldElement& other) const;
  FieldElement operator-() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement inv() const;
  SignedInt balanced_lift() const { return field_->balanced_lift(value_); }

  bool operator==(const FieldElement& other) const;

 private:
  const Field& common(const FieldElement& other) const;

  std::shared_ptr<const Field> field_;
  Element value_;
};

namespace detail {

template <std::size_t N>
inline void mul_fixed(const Limb* a, const Limb* b, const Limb* p, Limb pinv,
                      Limb* out) {
  using u128 = unsigned __int128;
  Limb t[N + 2] = {};
#pragma GCC unroll 4
  for (std::size_t i = 0; i < N; ++i) {
    Limb carry = 0;
#pragma GCC unroll 4
    for (std::size_t j = 0; j < N; ++j) {
      const u128 s = static_cast<u128>(a[j]) * b[i] + t[j] + carry;
      t[j] = static_cast<Limb>(s);
      carry = static_cast<Limb>(s >> 64);
    }
    u128 s = static_cast<u128>(t[N]) + carry;
    t[N] = static_cast<Limb>(s);
    t[N + 1] = static_cast<Limb>(s >> 64);

    const Limb q = t[0] * pinv;
    s = static_cast<u128>(q) * p[0] + t[0];
    carry = static_cast<Limb>(s >> 64);
#pragma GCC unroll 4
    for (std::size_t j = 1; j < N; ++j) {
      s = static_cast<u128>(q) * p[j] + t[j] + carry;
      t[j - 1] = static_cast<Limb>(s);
      carry = static_cast<Limb>(s >> 64);
    }
    s = static_cast<u128>(t[N]) + carry;
    t[N - 1] = static_cast<Limb>(s);
    t[N] = t[N + 1] + static_cast<Limb>(s >> 64);
  }
  // t < 2p: subtract p and keep the difference unless it borrowed.
  Limb d[N];
  Limb borrow = 0;
#pragma GCC unroll 4
  for (std::size_t j = 0; j < N; ++j) {
    const u128 diff = static_cast<u128>(t[j]) - p[j] - borrow;
    d[j] = static_cast<Limb>(diff);
    borrow = static_cast<Limb>(diff >> 64) & 1U;
  }
  const bool keep_t = t[N] < borrow;
#pragma GCC unroll 4
  for (std::size_t j = 0; j < N; ++j) out[j] = keep_t ? t[j] : d[j];
}

}  // namespace detail

namespace detail {

template <std::size_t N>
inline void add_fixed(const Limb* x, const Limb* y, const Limb* p, Limb* out) {
  using u128 = unsigned __int128;
  Limb sum[N];
  Limb carry = 0;
#pragma GCC unroll 4
  for (std::size_t j = 0; j < N; ++j) {
    const u128 s = static_cast<u128>(x[j]) + y[j] + carry;
    sum[j] = static_cast<Limb>(s);
    carry = static_cast<Limb>(s >> 64);
  }
  Limb d[N];
  Limb borrow = 0;
#pragma GCC unroll 4
  for (std::size_t j = 0; j < N; ++j) {
    const u128 diff = static_cast<u128>(sum[j]) - p[j] - borrow;
    d[j] = static_cast<Limb>(diff);
    borrow = static_cast<Limb>(diff >> 64) & 1U;
  }
  const bool keep_sum = carry < borrow;
#pragma GCC unroll 4
  for (std::size_t j = 0; j < N; ++j) out[j] = keep_sum ? sum[j] : d[j];
}

template <std::size_t N>
inline void sub_fixed(const Limb* x, const Limb* y, const Limb* p, Limb* out) {
  using u128 = unsigned __int128;
  Limb diff[N];
  Limb borrow = 0;
#pragma GCC unroll 4
  for (std::size_t j = 0; j < N; ++j) {
    const u128 d = static_cast<u128>(x[j]) - y[j] - borrow;
    diff[j] = static_cast<Limb>(d);
    borrow = static_cast<Limb>(d >> 64) & 1U;
  }
  const Limb mask = Limb{0} - borrow;
  Limb carry = 0;
#pragma GCC unroll 4
  for (std::size_t j = 0; j < N; ++j) {
    const u128 s = static_cast<u128>(diff[j]) + (p[j] & mask) + carry;
    out[j] = static_cast<Limb>(s);
    carry = static_cast<Limb>(s >> 64);
  }
}

}  // namespace detail

#define FFTP_DISPATCH_WIDTH(fn, ...)          \
  switch (n_) {                               \
    case 1: detail::fn<1>(__VA_ARGS__); break; \
    case 2: detail::fn<2>(__VA_ARGS__); break; \
    case 3: detail::fn<3>(__VA_ARGS__); break; \
    default: detail::fn<4>(__VA_ARGS__); break; \
  }

inline Element Field::mul(const Element& x, const Element& y) const {
  Element out;
  FFTP_DISPATCH_WIDTH(mul_fixed, x.limbs.data(), y.limbs.data(), p_.data(),
                      pinv_, out.limbs.data());
  return out;
}

inline Element Field::add(const Element& x, const Element& y) const {
  Element out;
  FFTP_DISPATCH_WIDTH(add_fixed, x.limbs.data(), y.limbs.data(), p_.data(),
                      out.limbs.data());
  return out;
}

inline Element Field::sub(const Element& x, const Element& y) const {
  Element out;
  FFTP_DISPATCH_WIDTH(sub_fixed, x.limbs.data(), y.limbs.data(), p_.data(),
                      out.limbs.data());
  return out;
}

#undef FFTP_DISPATCH_WIDTH

}  // namespace fftp::fp
