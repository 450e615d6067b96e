#include "fftp/fp.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace fftp::fp {
namespace {

Element to_element(const Natural& x) {
  Element out;
  const auto limbs = x.limbs();
  for (std::size_t i = 0; i < limbs.size(); ++i) out.limbs[i] = limbs[i];
  return out;
}

}  // namespace

Field::Field(primes::FftPrime prime, std::uint64_t seed)
    : prime_(std::move(prime)), n_(prime_.p.limb_count()) {
  if (prime_.m < 1) throw std::invalid_argument("FFT prime needs m >= 1");
  if (n_ > kMaxLimbs) {
    throw std::invalid_argument("field modulus exceeds " +
                                std::to_string(kMaxLimbs * kLimbBits) +
                                " bits");
  }
  const auto limbs = prime_.p.limbs();
  for (std::size_t i = 0; i < n_; ++i) p_[i] = limbs[i];
  pinv_ = fftp::detail::montgomery_inverse(p_[0]);
  r2_ = to_element(Natural::pow2(2 * kLimbBits * n_) % prime_.p);
  one_ = to_element(Natural::pow2(kLimbBits * n_) % prime_.p);
  minus_one_ = neg(one_);

  // x^a has order dividing 2^m; it has order exactly 2^m when its
  // 2^(m-1)-th power is -1.
  std::mt19937_64 rng(seed ^ prime_.p.low_u64() ^ (prime_.m << 32));
  for (;;) {
    const Natural x = Natural(rng()) % prime_.p;
    if (x.is_zero()) continue;
    const Element c = pow(from(x), prime_.a);
    Element probe = c;
    for (std::size_t i = 0; i + 1 < prime_.m; ++i) probe = mul(probe, probe);
    if (probe == minus_one_) {
      sylow_generator_ = c;
      break;
    }
  }
}

Element Field::from(const Natural& x) const {
  const Element reduced =
      to_element(cmp(x, prime_.p) < 0 ? x : x % prime_.p);
  return mul(reduced, r2_);
}

Element Field::from_u64(std::uint64_t x) const {
  if (n_ == 1 && x >= p_[0]) return from(Natural(x));
  Element plain;
  plain.limbs[0] = x;
  return mul(plain, r2_);
}

Element Field::from_signed(const SignedInt& x) const {
  const Element magnitude = from(x.magnitude());
  return x.sign() < 0 ? neg(magnitude) : magnitude;
}

Natural Field::to_natural(const Element& x) const {
  Element unit;
  unit.limbs[0] = 1;
  const Element plain = mul(x, unit);
  return Natural::from_limbs(
      std::vector<Limb>(plain.limbs.begin(), plain.limbs.begin() + n_));
}

Element Field::neg(const Element& x) const { return sub(Element{}, x); }

Element Field::pow(const Element& x, std::uint64_t e) const {
  Element acc = one_;
  Element base = x;
  while (e != 0) {
    if (e & 1U) acc = mul(acc, base);
    e >>= 1;
    if (e != 0) base = mul(base, base);
  }
  return acc;
}

Element Field::pow(const Element& x, const Natural& e) const {
  Element acc = one_;
  for (std::size_t i = e.bit_length(); i-- > 0;) {
    acc = mul(acc, acc);
    if (e.bit(i)) acc = mul(acc, x);
  }
  return acc;
}

Element Field::inv(const Element& x) const {
  if (is_zero(x)) throw std::domain_error("inverse of zero in F_p");
  return pow(x, prime_.p - Natural(2));
}

SignedInt Field::balanced_lift(const Element& x) const {
  const Natural v = to_natural(x);
  // p is odd, so (p - 1) / 2 is the largest value below p/2.
  const Natural half = prime_.p >> 1;
  if (cmp(v, half) > 0) return SignedInt(prime_.p - v, -1);
  return SignedInt(v);
}

Element Field::root_of_unity(std::uint64_t order) const {
  if (order == 0 || !std::has_single_bit(order)) {
    throw std::invalid_argument("root order must be a power of two");
  }
  const std::size_t log_order = static_cast<std::size_t>(std::countr_zero(order));
  if (log_order > prime_.m) {
    throw std::invalid_argument("no root of order 2^" +
                                std::to_string(log_order) + " in F_p with m = " +
                                std::to_string(prime_.m));
  }
  Element zeta = sylow_generator_;
  for (std::size_t i = log_order; i < prime_.m; ++i) zeta = mul(zeta, zeta);
  return zeta;
}

std::optional<Element> Field::sqrt_two_power(const Element& x) const {
  const std::size_t m = prime_.m;
  if (m < 1) return std::nullopt;
  Element probe = x;
  for (std::size_t i = 0; i + 1 < m; ++i) probe = mul(probe, probe);
  if (probe != one_) return std::nullopt;

  // Recover x = c^e bit by bit (Pohlig-Hellman in the cyclic 2-group
  // generated by c); bit 0 of e is zero since x is a square.
  const Element c_inv = inv(sylow_generator_);
  Element step_inv = c_inv;             // c^{-2^i}
  Element half_power = one_;            // c^{2^{i-1}}
  Element root = one_;                  // c^{e/2} restricted to found bits
  Element residual = x;                 // x * c^{-e}
  for (std::size_t i = 0; i < m; ++i) {
    Element h = residual;
    for (std::size_t j = i + 1; j < m; ++j) h = mul(h, h);
    if (h != one_) {
      if (i == 0) return std::nullopt;
      residual = mul(residual, step_inv);
      root = mul(root, half_power);
    }
    step_inv = mul(step_inv, step_inv);
    half_power = i == 0 ? sylow_generator_ : mul(half_power, half_power);
  }
  return root;
}

// FieldElement

const Field& FieldElement::common(const FieldElement& other) const {
  if (field_ != other.field_ &&
      !(field_->prime() == other.field_->prime())) {
    throw std::logic_error("field elements from different fields combined");
  }
  return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
  return {field_, common(other).add(value_, other.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
  return {field_, common(other).sub(value_, other.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
  return {field_, common(other).mul(value_, other.value_)};
}

FieldElement FieldElement::operator-() const {
  return {field_, field_->neg(value_)};
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  return {field_, field_->pow(value_, e)};
}

FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }

bool FieldElement::operator==(const FieldElement& other) const {
  common(other);
  return value_ == other.value_;
}

}  // namespace fftp::fp
