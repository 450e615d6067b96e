#include "fftp/bigint.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fftp {
namespace {

using u128 = unsigned __int128;

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// Divides limbs in place by a single word, returning the remainder.
Limb divide_by_word(std::vector<Limb>& limbs, Limb divisor) {
  u128 rem = 0;
  for (std::size_t i = limbs.size(); i-- > 0;) {
    const u128 cur = (rem << 64) | limbs[i];
    limbs[i] = static_cast<Limb>(cur / divisor);
    rem = cur % divisor;
  }
  while (!limbs.empty() && limbs.back() == 0) limbs.pop_back();
  return static_cast<Limb>(rem);
}

constexpr Limb kDecimalChunk = 10'000'000'000'000'000'000ULL;  // 10^19
constexpr int kDecimalChunkDigits = 19;

}  // namespace

Natural::Natural(std::uint64_t value) {
  if (value != 0) limbs_.push_back(value);
}

void Natural::normalize() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Natural Natural::from_limbs(std::vector<Limb> limbs) {
  return Natural(std::move(limbs));
}

Natural Natural::pow2(std::size_t exponent) {
  std::vector<Limb> limbs(exponent / kLimbBits + 1, 0);
  limbs.back() = Limb{1} << (exponent % kLimbBits);
  return Natural(std::move(limbs));
}

Natural Natural::from_hex(std::string_view hex) {
  if (hex.empty()) throw std::invalid_argument("empty hex string");
  std::vector<Limb> limbs((hex.size() + 15) / 16, 0);
  std::size_t nibble = 0;
  for (std::size_t i = hex.size(); i-- > 0; ++nibble) {
    const int v = hex_value(hex[i]);
    if (v < 0) {
      throw std::invalid_argument("invalid hex digit '" +
                                  std::string(1, hex[i]) + "'");
    }
    limbs[nibble / 16] |= static_cast<Limb>(v) << (4 * (nibble % 16));
  }
  return Natural(std::move(limbs));
}

Natural Natural::from_decimal(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty decimal string");
  std::vector<Limb> limbs;
  std::size_t pos = 0;
  // First chunk takes the leftover digits so every later chunk has 19.
  std::size_t chunk = digits.size() % kDecimalChunkDigits;
  if (chunk == 0) chunk = kDecimalChunkDigits;
  while (pos < digits.size()) {
    Limb value = 0;
    Limb scale = 1;
    for (std::size_t i = 0; i < chunk; ++i) {
      const char c = digits[pos + i];
      if (c < '0' || c > '9') {
        throw std::invalid_argument("invalid decimal digit '" +
                                    std::string(1, c) + "'");
      }
      value = value * 10 + static_cast<Limb>(c - '0');
      scale *= 10;
    }
    u128 carry = value;
    for (Limb& limb : limbs) {
      const u128 t = static_cast<u128>(limb) * scale + carry;
      limb = static_cast<Limb>(t);
      carry = t >> 64;
    }
    if (carry != 0) limbs.push_back(static_cast<Limb>(carry));
    pos += chunk;
    chunk = kDecimalChunkDigits;
  }
  return Natural(std::move(limbs));
}

std::string Natural::to_hex() const {
  if (limbs_.empty()) return "0";
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(limbs_.size() * 16);
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    for (int shift = 60; shift >= 0; shift -= 4) {
      const char c = kDigits[(limbs_[i] >> shift) & 0xF];
      if (out.empty() && c == '0') continue;
      out.push_back(c);
    }
  }
  return out;
}

std::string Natural::to_decimal() const {
  if (limbs_.empty()) return "0";
  std::vector<Limb> work = limbs_;
  std::vector<Limb> chunks;
  while (!work.empty()) chunks.push_back(divide_by_word(work, kDecimalChunk));
  std::string out = std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out.append(kDecimalChunkDigits - part.size(), '0');
    out += part;
  }
  return out;
}

std::size_t Natural::bit_length() const {
  if (limbs_.empty()) return 0;
  return kLimbBits * (limbs_.size() - 1) +
         (kLimbBits - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
}

bool Natural::bit(std::size_t index) const {
  const std::size_t word = index / kLimbBits;
  if (word >= limbs_.size()) return false;
  return ((limbs_[word] >> (index % kLimbBits)) & 1U) != 0;
}

Natural Natural::bitslice(std::size_t lo, std::size_t width) const {
  const std::size_t first = lo / kLimbBits;
  if (width == 0 || first >= limbs_.size()) return {};
  const unsigned shift = lo % kLimbBits;
  const std::size_t out_limbs = (width + kLimbBits - 1) / kLimbBits;
  std::vector<Limb> out(out_limbs, 0);
  for (std::size_t i = 0; i < out_limbs; ++i) {
    const std::size_t src = first + i;
    if (src >= limbs_.size()) break;
    Limb word = limbs_[src] >> shift;
    if (shift != 0 && src + 1 < limbs_.size()) {
      word |= limbs_[src + 1] << (kLimbBits - shift);
    }
    out[i] = word;
  }
  const unsigned tail = width % kLimbBits;
  if (tail != 0) out.back() &= (Limb{1} << tail) - 1;
  return Natural(std::move(out));
}

std::uint64_t Natural::mod_u64(std::uint64_t divisor) const {
  if (divisor == 0) throw std::domain_error("division by zero");
  u128 rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    rem = ((rem << 64) | limbs_[i]) % divisor;
  }
  return static_cast<std::uint64_t>(rem);
}

Natural& Natural::operator+=(const Natural& other) {
  if (limbs_.size() < other.limbs_.size()) {
    limbs_.resize(other.limbs_.size(), 0);
  }
  Limb carry = 0;
  std::size_t i = 0;
  for (; i < other.limbs_.size(); ++i) {
    const u128 t = static_cast<u128>(limbs_[i]) + other.limbs_[i] + carry;
    limbs_[i] = static_cast<Limb>(t);
    carry = static_cast<Limb>(t >> 64);
  }
  for (; carry != 0 && i < limbs_.size(); ++i) {
    limbs_[i] += 1;
    carry = limbs_[i] == 0 ? 1 : 0;
  }
  if (carry != 0) limbs_.push_back(carry);
  return *this;
}

Natural& Natural::operator-=(const Natural& other) {
  if (cmp(*this, other) < 0) {
    throw std::underflow_error("natural subtraction would be negative");
  }
  Limb borrow = 0;
  std::size_t i = 0;
  for (; i < other.limbs_.size(); ++i) {
    const Limb a = limbs_[i];
    const Limb b = other.limbs_[i];
    const Limb d = a - b;
    const Limb d2 = d - borrow;
    borrow = static_cast<Limb>((a < b) || (d < borrow));
    limbs_[i] = d2;
  }
  for (; borrow != 0 && i < limbs_.size(); ++i) {
    borrow = limbs_[i] == 0 ? 1 : 0;
    limbs_[i] -= 1;
  }
  normalize();
  return *this;
}

Natural& Natural::operator*=(const Natural& other) {
  *this = mul_karatsuba(*this, other);
  return *this;
}

Natural& Natural::operator<<=(std::size_t bits) {
  if (limbs_.empty() || bits == 0) return *this;
  const std::size_t words = bits / kLimbBits;
  const unsigned shift = bits % kLimbBits;
  std::vector<Limb> out(limbs_.size() + words + 1, 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    out[i + words] |= limbs_[i] << shift;
    if (shift != 0) out[i + words + 1] = limbs_[i] >> (kLimbBits - shift);
  }
  limbs_ = std::move(out);
  normalize();
  return *this;
}

Natural& Natural::operator>>=(std::size_t bits) {
  *this = bitslice(bits, bit_length() > bits ? bit_length() - bits : 0);
  return *this;
}

void Natural::add_shifted(const Natural& other, std::size_t bit_offset) {
  if (other.is_zero()) return;
  const std::size_t words = bit_offset / kLimbBits;
  const unsigned shift = bit_offset % kLimbBits;
  const std::size_t need = words + other.limbs_.size() + 1;
  if (limbs_.size() < need) limbs_.resize(need, 0);
  Limb carry = 0;
  Limb spill = 0;
  std::size_t i = 0;
  for (; i < other.limbs_.size(); ++i) {
    const Limb w = (other.limbs_[i] << shift) | spill;
    spill = shift != 0 ? other.limbs_[i] >> (kLimbBits - shift) : 0;
    const u128 t = static_cast<u128>(limbs_[words + i]) + w + carry;
    limbs_[words + i] = static_cast<Limb>(t);
    carry = static_cast<Limb>(t >> 64);
  }
  std::size_t pos = words + i;
  const u128 t = static_cast<u128>(limbs_[pos]) + spill + carry;
  limbs_[pos] = static_cast<Limb>(t);
  carry = static_cast<Limb>(t >> 64);
  for (++pos; carry != 0; ++pos) {
    if (pos == limbs_.size()) limbs_.push_back(0);
    limbs_[pos] += 1;
    carry = limbs_[pos] == 0 ? 1 : 0;
  }
  normalize();
}

int cmp(const Natural& x, const Natural& y) {
  const auto xl = x.limbs();
  const auto yl = y.limbs();
  if (xl.size() != yl.size()) return xl.size() < yl.size() ? -1 : 1;
  for (std::size_t i = xl.size(); i-- > 0;) {
    if (xl[i] != yl[i]) return xl[i] < yl[i] ? -1 : 1;
  }
  return 0;
}

std::strong_ordering operator<=>(const Natural& x, const Natural& y) {
  return cmp(x, y) <=> 0;
}

Natural add(const Natural& x, const Natural& y) { return x + y; }
Natural sub(const Natural& x, const Natural& y) { return x - y; }

std::pair<Natural, Natural> divmod(const Natural& x, const Natural& y) {
  if (y.is_zero()) throw std::domain_error("division by zero");
  if (cmp(x, y) < 0) return {Natural{}, x};

  if (y.limbs_.size() == 1) {
    std::vector<Limb> q = x.limbs_;
    const Limb r = divide_by_word(q, y.limbs_[0]);
    return {Natural(std::move(q)), Natural(r)};
  }

  // Knuth, TAOCP vol. 2, algorithm D with 64-bit digits.
  const std::size_t n = y.limbs_.size();
  const std::size_t m = x.limbs_.size() - n;
  const unsigned s = static_cast<unsigned>(std::countl_zero(y.limbs_.back()));

  std::vector<Limb> v(n);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = y.limbs_[i] << s;
    if (s != 0 && i > 0) v[i] |= y.limbs_[i - 1] >> (kLimbBits - s);
  }
  std::vector<Limb> u(x.limbs_.size() + 1, 0);
  u[x.limbs_.size()] = s != 0 ? x.limbs_.back() >> (kLimbBits - s) : 0;
  for (std::size_t i = x.limbs_.size(); i-- > 0;) {
    u[i] = x.limbs_[i] << s;
    if (s != 0 && i > 0) u[i] |= x.limbs_[i - 1] >> (kLimbBits - s);
  }

  std::vector<Limb> q(m + 1, 0);
  const u128 base = static_cast<u128>(1) << 64;
  for (std::size_t j = m + 1; j-- > 0;) {
    const u128 num = (static_cast<u128>(u[j + n]) << 64) | u[j + n - 1];
    u128 qhat = num / v[n - 1];
    u128 rhat = num % v[n - 1];
    while (qhat >= base ||
           qhat * v[n - 2] > ((rhat << 64) | u[j + n - 2])) {
      --qhat;
      rhat += v[n - 1];
      if (rhat >= base) break;
    }

    Limb borrow = 0;
    Limb carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const u128 p = qhat * v[i] + carry;
      carry = static_cast<Limb>(p >> 64);
      const Limb plo = static_cast<Limb>(p);
      const Limb t = u[i + j] - plo;
      const Limb b1 = u[i + j] < plo ? 1 : 0;
      u[i + j] = t - borrow;
      borrow = b1 + (t < borrow ? 1 : 0);
    }
    const Limb t = u[j + n] - carry;
    const Limb b1 = u[j + n] < carry ? 1 : 0;
    u[j + n] = t - borrow;
    const bool negative = (b1 + (t < borrow ? 1 : 0)) != 0;

    q[j] = static_cast<Limb>(qhat);
    if (negative) {
      --q[j];
      Limb c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const u128 sum = static_cast<u128>(u[i + j]) + v[i] + c;
        u[i + j] = static_cast<Limb>(sum);
        c = static_cast<Limb>(sum >> 64);
      }
      u[j + n] += c;
    }
  }

  std::vector<Limb> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = u[i] >> s;
    if (s != 0) r[i] |= u[i + 1] << (kLimbBits - s);
  }
  return {Natural(std::move(q)), Natural(std::move(r))};
}

Natural pow(const Natural& base, std::uint64_t exponent) {
  Natural result(1);
  Natural square = base;
  while (exponent != 0) {
    if (exponent & 1U) result = mul_karatsuba(result, square);
    exponent >>= 1;
    if (exponent != 0) square = mul_karatsuba(square, square);
  }
  return result;
}

Natural gcd(Natural x, Natural y) {
  while (!y.is_zero()) {
    Natural r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

// SignedInt

SignedInt::SignedInt(std::int64_t value) {
  if (value > 0) {
    sign_ = 1;
    magnitude_ = Natural(static_cast<std::uint64_t>(value));
  } else if (value < 0) {
    sign_ = -1;
    magnitude_ = Natural(static_cast<std::uint64_t>(-(value + 1)) + 1);
  }
}

SignedInt::SignedInt(Natural magnitude, int sign)
    : sign_(magnitude.is_zero() ? 0 : (sign < 0 ? -1 : 1)),
      magnitude_(std::move(magnitude)) {}

SignedInt SignedInt::operator-() const {
  SignedInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

SignedInt& SignedInt::operator+=(const SignedInt& other) {
  if (other.sign_ == 0) return *this;
  if (sign_ == 0) return *this = other;
  if (sign_ == other.sign_) {
    magnitude_ += other.magnitude_;
    return *this;
  }
  const int c = cmp(magnitude_, other.magnitude_);
  if (c == 0) {
    *this = SignedInt{};
  } else if (c > 0) {
    magnitude_ -= other.magnitude_;
  } else {
    magnitude_ = other.magnitude_ - magnitude_;
    sign_ = other.sign_;
  }
  return *this;
}

SignedInt& SignedInt::operator-=(const SignedInt& other) {
  return *this += -other;
}

SignedInt& SignedInt::operator*=(const SignedInt& other) {
  magnitude_ = mul_karatsuba(magnitude_, other.magnitude_);
  sign_ = magnitude_.is_zero() ? 0 : sign_ * other.sign_;
  return *this;
}

Natural SignedInt::mod(const Natural& modulus) const {
  Natural r = divmod(magnitude_, modulus).second;
  if (sign_ < 0 && !r.is_zero()) return modulus - r;
  return r;
}

std::string SignedInt::to_decimal() const {
  return (sign_ < 0 ? "-" : "") + magnitude_.to_decimal();
}

int cmp(const SignedInt& x, const SignedInt& y) {
  if (x.sign() != y.sign()) return x.sign() < y.sign() ? -1 : 1;
  const int c = cmp(x.magnitude(), y.magnitude());
  return x.sign() >= 0 ? c : -c;
}

std::strong_ordering operator<=>(const SignedInt& x, const SignedInt& y) {
  return cmp(x, y) <=> 0;
}

SignedInt add(const SignedInt& x, const SignedInt& y) { return x + y; }
SignedInt sub(const SignedInt& x, const SignedInt& y) { return x - y; }

std::size_t lg(std::uint64_t x) {
  if (x <= 1) return 0;
  return kLimbBits - static_cast<std::size_t>(std::countl_zero(x - 1));
}

std::size_t lg(const Natural& x) {
  if (cmp(x, Natural(1)) <= 0) return 0;
  return (x - Natural(1)).bit_length();
}

}  // namespace fftp
