#include <algorithm>
#include <span>

#include "fftp/bigint.hpp"

namespace fftp {
namespace {

using u128 = unsigned __int128;
using Limbs = std::vector<Limb>;

std::span<const Limb> trim(std::span<const Limb> s) {
  while (!s.empty() && s.back() == 0) s = s.first(s.size() - 1);
  return s;
}

void basecase(std::span<const Limb> a, std::span<const Limb> b, Limb* out) {
  std::fill(out, out + a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Limb carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const u128 t = static_cast<u128>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<Limb>(t);
      carry = static_cast<Limb>(t >> 64);
    }
    out[i + b.size()] = carry;
  }
}

// out[offset..] += src; out must be wide enough to absorb the carry.
void accumulate(Limbs& out, std::span<const Limb> src, std::size_t offset) {
  Limb carry = 0;
  std::size_t i = 0;
  for (; i < src.size(); ++i) {
    const u128 t = static_cast<u128>(out[offset + i]) + src[i] + carry;
    out[offset + i] = static_cast<Limb>(t);
    carry = static_cast<Limb>(t >> 64);
  }
  for (std::size_t k = offset + i; carry != 0; ++k) {
    out[k] += 1;
    carry = out[k] == 0 ? 1 : 0;
  }
}

// x -= y, requires x >= y.
void subtract(Limbs& x, std::span<const Limb> y) {
  Limb borrow = 0;
  std::size_t i = 0;
  for (; i < y.size(); ++i) {
    const Limb d = x[i] - y[i];
    const Limb d2 = d - borrow;
    borrow = static_cast<Limb>((x[i] < y[i]) || (d < borrow));
    x[i] = d2;
  }
  for (; borrow != 0; ++i) {
    borrow = x[i] == 0 ? 1 : 0;
    x[i] -= 1;
  }
}

Limbs sum(std::span<const Limb> a, std::span<const Limb> b) {
  if (a.size() < b.size()) std::swap(a, b);
  Limbs out(a.begin(), a.end());
  out.push_back(0);
  accumulate(out, b, 0);
  return out;
}

Limbs multiply(std::span<const Limb> a, std::span<const Limb> b,
               std::size_t cutoff) {
  a = trim(a);
  b = trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return {};
  Limbs out(a.size() + b.size(), 0);
  if (b.size() < cutoff) {
    basecase(a, b, out.data());
    return out;
  }

  const std::size_t half = (a.size() + 1) / 2;
  if (b.size() <= half) {
    // Unbalanced: slice the longer operand into pieces of the shorter's size.
    for (std::size_t off = 0; off < a.size(); off += b.size()) {
      const auto piece = a.subspan(off, std::min(b.size(), a.size() - off));
      const Limbs partial = multiply(piece, b, cutoff);
      accumulate(out, trim(partial), off);
    }
    return out;
  }

  const auto a0 = a.first(half);
  const auto a1 = a.subspan(half);
  const auto b0 = b.first(half);
  const auto b1 = b.subspan(half);

  const Limbs z0 = multiply(a0, b0, cutoff);
  const Limbs z2 = multiply(a1, b1, cutoff);
  const Limbs sa = sum(a0, a1);
  const Limbs sb = sum(b0, b1);
  Limbs z1 = multiply(sa, sb, cutoff);
  z1.resize(std::max(z1.size(), std::max(z0.size(), z2.size())) + 1, 0);
  subtract(z1, trim(z0));
  subtract(z1, trim(z2));

  accumulate(out, trim(z0), 0);
  accumulate(out, trim(z1), half);
  accumulate(out, trim(z2), 2 * half);
  return out;
}

}  // namespace

Natural mul_karatsuba(const Natural& x, const Natural& y,
                      std::size_t cutoff_limbs) {
  // Below four limbs the half-sums can be as wide as the operands, so the
  // recursion needs the base case there.
  const std::size_t cutoff = std::max<std::size_t>(cutoff_limbs, 4);
  return Natural(multiply(x.limbs_, y.limbs_, cutoff));
}

}  // namespace fftp
