#include "fftp/dft.hpp"

#include <bit>
#include <string>

#include "fftp/counters.hpp"

namespace fftp::dft {
namespace {

void require_power_of_two(std::size_t length, const char* what) {
  if (length == 0 || !std::has_single_bit(length)) {
    throw std::invalid_argument(std::string(what) +
                                " length must be a power of two, got " +
                                std::to_string(length));
  }
}

void require_order(const Field& field, const Element& root,
                   std::size_t order) {
  if (!has_order(field, root, order)) {
    throw OrderMismatch("root does not have order " + std::to_string(order));
  }
}

std::size_t log2_exact(std::size_t x) {
  return static_cast<std::size_t>(std::countr_zero(x));
}

// In-place radix-2 transform of one block; twiddles[j] = root^j for
// j < n/2 where root has order n.
void radix2_in_place(const Field& field, std::span<Element> a,
                     std::span<const Element> twiddles) {
  const std::size_t n = a.size();
  if (n == 1) return;
  const std::size_t bits = log2_exact(n);
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; (j & bit) != 0; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const Element& u = a[start + j];
        const Element v = j == 0 ? a[start + j + half]
                                 : field.mul(a[start + j + half],
                                             twiddles[j * stride]);
        const Element sum = field.add(u, v);
        a[start + j + half] = field.sub(u, v);
        a[start + j] = sum;
      }
    }
  }
  detail::counters().field_muls += (n / 2) * bits;
}

std::vector<Element> power_table(const Field& field, const Element& root,
                                 std::size_t count) {
  std::vector<Element> table(count);
  Element cur = field.one();
  for (std::size_t j = 0; j < count; ++j) {
    table[j] = cur;
    cur = field.mul(cur, root);
  }
  return table;
}

}  // namespace

bool has_order(const Field& field, const Element& root, std::size_t order) {
  if (order == 0 || !std::has_single_bit(order)) return false;
  if (order == 1) return root == field.one();
  Element half = root;
  for (std::size_t i = 1; i < order / 2; i <<= 1) half = field.mul(half, half);
  return field.mul(half, half) == field.one() && half != field.one();
}

Poly dft_naive(const Field& field, std::span<const Element> f,
               const Element& zeta) {
  const std::size_t n = f.size();
  require_power_of_two(n, "DFT");
  require_order(field, zeta, n);
  Poly out(n);
  Element point = field.one();
  for (std::size_t i = 0; i < n; ++i) {
    Element acc = field.zero();
    for (std::size_t j = n; j-- > 0;) acc = field.add(field.mul(acc, point), f[j]);
    out[i] = acc;
    point = field.mul(point, zeta);
  }
  detail::counters().field_muls += n * n;
  return out;
}

Poly dft_radix2(const Field& field, std::span<const Element> f,
                const Element& zeta) {
  const std::size_t n = f.size();
  require_power_of_two(n, "DFT");
  require_order(field, zeta, n);
  Poly out(f.begin(), f.end());
  radix2_in_place(field, out, power_table(field, zeta, n / 2));
  return out;
}

Poly idft(const Field& field, std::span<const Element> transformed,
          const Element& zeta) {
  Poly out = dft_radix2(field, transformed, field.inv(zeta));
  scale(field, out, field.inv(field.from_u64(transformed.size())));
  return out;
}

Poly cyclic_convolution_naive(const Field& field, std::span<const Element> f,
                              std::span<const Element> g) {
  if (f.size() != g.size()) {
    throw std::invalid_argument("cyclic convolution needs equal lengths");
  }
  const std::size_t n = f.size();
  Poly out(n, field.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = i + j < n ? i + j : i + j - n;
      out[k] = field.add(out[k], field.mul(f[i], g[j]));
    }
  }
  detail::counters().field_muls += n * n;
  return out;
}

void scale(const Field& field, std::span<Element> values,
           const Element& factor) {
  for (Element& v : values) v = field.mul(v, factor);
  detail::counters().field_muls += values.size();
}

CtPlan make_ct_plan(const Field& field, std::size_t length,
                    std::size_t short_length, const Element& zeta) {
  require_power_of_two(length, "transform");
  require_power_of_two(short_length, "short transform");
  if (length > 1 && (short_length < 2 || short_length > length)) {
    throw std::invalid_argument("short length must satisfy 2 <= S <= L");
  }
  require_order(field, zeta, length);

  CtPlan plan;
  plan.length = length;
  plan.short_length = short_length;
  plan.zeta = zeta;
  if (length == 1) {
    plan.omega = field.one();
    return plan;
  }
  plan.omega = field.pow(zeta, length / short_length);

  const std::size_t lg_l = log2_exact(length);
  const std::size_t lg_s = log2_exact(short_length);
  plan.short_layers = lg_l / lg_s;
  plan.radix2_layers = lg_l - plan.short_layers * lg_s;

  std::size_t block = length;
  Element root = zeta;  // order `block`
  auto add_level = [&](std::size_t radix) {
    CtPlan::Level level;
    level.block = block;
    level.radix = radix;
    const std::size_t rest = block / radix;
    level.twiddles.resize(block);
    Element row_root = field.one();  // root^j2
    for (std::size_t j2 = 0; j2 < rest; ++j2) {
      Element w = field.one();
      for (std::size_t k1 = 0; k1 < radix; ++k1) {
        level.twiddles[j2 * radix + k1] = w;
        w = field.mul(w, row_root);
      }
      row_root = field.mul(row_root, root);
    }
    plan.levels.push_back(std::move(level));
    root = field.pow(root, radix);
    block = rest;
  };
  for (std::size_t i = 0; i < plan.short_layers; ++i) add_level(short_length);
  for (std::size_t i = 0; i < plan.radix2_layers; ++i) add_level(2);
  return plan;
}

Poly dft_cooley_tukey(const Field& field, std::span<const Element> f,
                      const CtPlan& plan, const ShortEngine& short_engine) {
  const std::size_t n = plan.length;
  if (f.size() != n) {
    throw std::invalid_argument("input length does not match the plan");
  }
  Poly buf(f.begin(), f.end());
  Poly tmp(n);
  auto& counters = detail::counters();

  // Each level splits a block of length N = R * M, indices j = j1 * M + j2
  // in and k = k1 + R * k2 out: R-point transforms over j1, twiddle
  // zeta_N^(j2 k1), then M-point transforms over j2 at the next level.
  for (const CtPlan::Level& level : plan.levels) {
    const std::size_t block = level.block;
    const std::size_t radix = level.radix;
    const std::size_t rest = block / radix;
    for (std::size_t b = 0; b < n; b += block) {
      transpose<Element>(std::span<const Element>(buf).subspan(b, block),
                         std::span<Element>(tmp).subspan(b, block), radix,
                         rest);
    }
    if (radix == 2) {
      for (std::size_t i = 0; i < n; i += 2) {
        const Element sum = field.add(tmp[i], tmp[i + 1]);
        tmp[i + 1] = field.sub(tmp[i], tmp[i + 1]);
        tmp[i] = sum;
      }
    } else {
      short_engine(tmp);
      ++counters.short_layers;
      counters.short_transforms += n / radix;
    }
    for (std::size_t b = 0; b < n; b += block) {
      for (std::size_t j2 = 1; j2 < rest; ++j2) {
        for (std::size_t k1 = 1; k1 < radix; ++k1) {
          Element& x = tmp[b + j2 * radix + k1];
          x = field.mul(x, level.twiddles[j2 * radix + k1]);
        }
      }
      transpose<Element>(std::span<const Element>(tmp).subspan(b, block),
                         std::span<Element>(buf).subspan(b, block), rest,
                         radix);
    }
    counters.field_muls += (n / block) * (rest - 1) * (radix - 1);
    ++counters.layers;
  }

  // Block k1 of each level now holds its M outputs for k2 in natural order;
  // interleave them back to position k1 + R * k2, innermost level first.
  for (auto it = plan.levels.rbegin(); it != plan.levels.rend(); ++it) {
    const std::size_t block = it->block;
    const std::size_t radix = it->radix;
    for (std::size_t b = 0; b < n; b += block) {
      transpose<Element>(std::span<const Element>(buf).subspan(b, block),
                         std::span<Element>(tmp).subspan(b, block), radix,
                         block / radix);
    }
    buf.swap(tmp);
  }
  return buf;
}

ShortEngine naive_short_engine(const Field& field, const Element& omega,
                               std::size_t short_length) {
  return [&field, omega, short_length](std::span<Element> batch) {
    for (std::size_t off = 0; off < batch.size(); off += short_length) {
      const auto row = batch.subspan(off, short_length);
      const Poly out = dft_naive(field, row, omega);
      std::copy(out.begin(), out.end(), row.begin());
    }
  };
}

ShortEngine radix2_short_engine(const Field& field, const Element& omega,
                                std::size_t short_length) {
  require_order(field, omega, short_length);
  auto twiddles = std::make_shared<std::vector<Element>>(
      power_table(field, omega, short_length / 2));
  return [&field, twiddles, short_length](std::span<Element> batch) {
    for (std::size_t off = 0; off < batch.size(); off += short_length) {
      radix2_in_place(field, batch.subspan(off, short_length), *twiddles);
    }
  };
}

}  // namespace fftp::dft
