#include "fftp/montgomery.hpp"

#include <stdexcept>

namespace fftp {

Montgomery::Montgomery(const Natural& modulus)
    : modulus_(modulus), n_(modulus.limb_count()) {
  if (!modulus.is_odd() || cmp(modulus, Natural(1)) <= 0) {
    throw std::invalid_argument("Montgomery modulus must be odd and > 1");
  }
  p_.assign(modulus.limbs().begin(), modulus.limbs().end());
  pinv_ = detail::montgomery_inverse(p_[0]);
  r2_ = to_limbs(Natural::pow2(2 * kLimbBits * n_) % modulus_);
  one_ = to_limbs(Natural::pow2(kLimbBits * n_) % modulus_);
}

std::vector<Limb> Montgomery::to_limbs(const Natural& x) const {
  std::vector<Limb> out(n_, 0);
  const auto src = x.limbs();
  for (std::size_t i = 0; i < src.size() && i < n_; ++i) out[i] = src[i];
  return out;
}

std::vector<Limb> Montgomery::to_form(const Natural& x) const {
  const std::vector<Limb> reduced =
      to_limbs(cmp(x, modulus_) < 0 ? x : x % modulus_);
  std::vector<Limb> out(n_);
  mul(reduced, r2_, out);
  return out;
}

Natural Montgomery::from_form(std::span<const Limb> x) const {
  std::vector<Limb> unit(n_, 0);
  unit[0] = 1;
  std::vector<Limb> out(n_);
  mul(x, unit, out);
  return Natural::from_limbs(std::move(out));
}

void Montgomery::mul(std::span<const Limb> a, std::span<const Limb> b,
                     std::span<Limb> out) const {
  std::vector<Limb> scratch(n_ + 2);
  detail::mont_mul(a.data(), b.data(), p_.data(), pinv_, n_, out.data(),
                   scratch.data());
}

Natural Montgomery::pow(const Natural& base, const Natural& exponent) const {
  std::vector<Limb> scratch(n_ + 2);
  std::vector<Limb> acc = one_;
  const std::vector<Limb> b = to_form(base);
  for (std::size_t i = exponent.bit_length(); i-- > 0;) {
    detail::mont_mul(acc.data(), acc.data(), p_.data(), pinv_, n_, acc.data(),
                     scratch.data());
    if (exponent.bit(i)) {
      detail::mont_mul(acc.data(), b.data(), p_.data(), pinv_, n_, acc.data(),
                       scratch.data());
    }
  }
  return from_form(acc);
}

}  // namespace fftp
