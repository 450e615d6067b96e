#include "fftp/bivariate.hpp"

#include <string>

#include "fftp/counters.hpp"

namespace fftp::bivariate {
namespace {

constexpr std::size_t kKaratsubaThreshold = 8;

void check_shape(const auto& x, const ChunkParams& params, const char* what) {
  if (x.rows != params.S || x.cols != params.k) {
    throw std::invalid_argument(std::string(what) + " shape is not S x k");
  }
}

void schoolbook(const Field& field, std::span<const Element> x,
                std::span<const Element> y, std::span<Element> out) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      out[i + j] = field.add(out[i + j], field.mul(x[i], y[j]));
    }
  }
  detail::counters().field_muls += x.size() * y.size();
}

// out (length 2n - 1, zeroed) += x * y for equal lengths n.
void karatsuba(const Field& field, std::span<const Element> x,
               std::span<const Element> y, std::span<Element> out) {
  const std::size_t n = x.size();
  if (n <= kKaratsubaThreshold) {
    schoolbook(field, x, y, out);
    return;
  }
  const std::size_t lo = n / 2;
  const std::size_t hi = n - lo;
  const auto x0 = x.first(lo), x1 = x.subspan(lo);
  const auto y0 = y.first(lo), y1 = y.subspan(lo);

  Poly z0(2 * lo - 1, field.zero());
  Poly z2(2 * hi - 1, field.zero());
  karatsuba(field, x0, y0, z0);
  karatsuba(field, x1, y1, z2);

  Poly xs(x1.begin(), x1.end());
  Poly ys(y1.begin(), y1.end());
  for (std::size_t i = 0; i < lo; ++i) {
    xs[i] = field.add(xs[i], x0[i]);
    ys[i] = field.add(ys[i], y0[i]);
  }
  Poly z1(2 * hi - 1, field.zero());
  karatsuba(field, xs, ys, z1);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = field.sub(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = field.sub(z1[i], z2[i]);

  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = field.add(out[i], z0[i]);
  for (std::size_t i = 0; i < z1.size(); ++i) {
    out[lo + i] = field.add(out[lo + i], z1[i]);
  }
  for (std::size_t i = 0; i < z2.size(); ++i) {
    out[2 * lo + i] = field.add(out[2 * lo + i], z2[i]);
  }
}

Poly transpose_poly(std::span<const Element> in, std::size_t rows,
                    std::size_t cols) {
  return dft::transpose<Element>(in, rows, cols);
}

}  // namespace

ChunkParams ChunkParams::make(const primes::FftPrime& prime, std::size_t k,
                              std::size_t S) {
  if (k == 0 || prime.m % k != 0) {
    throw std::invalid_argument("chunk count " + std::to_string(k) +
                                " does not divide m = " +
                                std::to_string(prime.m));
  }
  ChunkParams params;
  params.k = k;
  params.r = prime.m / k;
  params.a = prime.a;
  params.m = prime.m;
  params.S = S;
  return params;
}

Natural ChunkParams::coefficient_bound() const {
  return Natural::pow2(2 * r) * Natural(S) * Natural(k) * pow(a, 3);
}

NaturalMatrix split(std::span<const Natural> f, const ChunkParams& params) {
  if (f.size() != params.S) {
    throw std::invalid_argument("split: input length is not S");
  }
  const std::size_t k = params.k;
  const std::size_t r = params.r;
  NaturalMatrix out(params.S, k);
  for (std::size_t i = 0; i < params.S; ++i) {
    for (std::size_t j = 1; j < k; ++j) {
      out(i, j) = f[i].bitslice((k - 1 - j) * r, r);
    }
    out(i, 0) = f[i] >> ((k - 1) * r);
  }
  return out;
}

NaturalMatrix split(const Field& field, std::span<const Element> f,
                    const ChunkParams& params) {
  std::vector<Natural> values;
  values.reserve(f.size());
  for (const Element& e : f) values.push_back(field.to_natural(e));
  return split(values, params);
}

SignedMatrix mul_bivariate_integer(const SignedMatrix& f,
                                   const SignedMatrix& g,
                                   const ChunkParams& params) {
  check_shape(f, params, "left factor");
  check_shape(g, params, "right factor");
  const std::size_t S = params.S;
  const std::size_t k = params.k;
  const SignedInt a(params.a);
  SignedMatrix h(S, k);
  for (std::size_t i1 = 0; i1 < S; ++i1) {
    for (std::size_t i2 = 0; i2 < S; ++i2) {
      const std::size_t i = (i1 + i2) % S;
      for (std::size_t j1 = 0; j1 < k; ++j1) {
        if (f(i1, j1).is_zero()) continue;
        for (std::size_t j2 = 0; j2 < k; ++j2) {
          const SignedInt prod = f(i1, j1) * g(i2, j2);
          if (j1 + j2 < k) {
            h(i, j1 + j2) += prod;
          } else {
            h(i, j1 + j2 - k) -= a * prod;
          }
        }
      }
    }
  }
  return h;
}

SignedMatrix mul_bivariate_integer(const NaturalMatrix& f,
                                   const NaturalMatrix& g,
                                   const ChunkParams& params) {
  auto to_signed = [](const NaturalMatrix& x) {
    SignedMatrix out(x.rows, x.cols);
    for (std::size_t i = 0; i < x.data.size(); ++i) out.data[i] = SignedInt(x.data[i]);
    return out;
  };
  return mul_bivariate_integer(to_signed(f), to_signed(g), params);
}

Poly pointwise_y_product(const Field& field, std::span<const Element> x,
                         std::span<const Element> y, const Element& a_mod) {
  const std::size_t k = x.size();
  if (y.size() != k) {
    throw std::invalid_argument("pointwise_y_product: length mismatch");
  }
  if (k == 0) return {};
  Poly prod(2 * k - 1, field.zero());
  karatsuba(field, x, y, prod);
  Poly out(prod.begin(), prod.begin() + k);
  for (std::size_t d = k; d < prod.size(); ++d) {
    out[d - k] = field.sub(out[d - k], field.mul(a_mod, prod[d]));
  }
  detail::counters().field_muls += k - 1;
  return out;
}

ColumnTransform radix2_column_transform(const Field& field) {
  return [&field](std::span<Element> column, const Element& root) {
    const Poly out = dft::dft_radix2(field, column, root);
    std::copy(out.begin(), out.end(), column.begin());
  };
}

TransformedFactor transform_factor(const Field& field, const ModMatrix& v,
                                   const Element& zeta,
                                   const ColumnTransform& column_transform) {
  (void)field;
  TransformedFactor out;
  out.S = v.rows;
  out.k = v.cols;
  out.columns = transpose_poly(v.data, v.rows, v.cols);
  for (std::size_t j = 0; j < out.k; ++j) {
    column_transform(std::span<Element>(out.columns).subspan(j * out.S, out.S),
                     zeta);
  }
  return out;
}

ModMatrix mul_bivariate_modp(const Field& field, const ModMatrix& u,
                             const TransformedFactor& v_hat,
                             const Element& zeta, const Element& a_mod,
                             const ColumnTransform& column_transform) {
  const std::size_t S = u.rows;
  const std::size_t k = u.cols;
  if (v_hat.S != S || v_hat.k != k) {
    throw std::invalid_argument("mul_bivariate_modp: shape mismatch");
  }
  if (!dft::has_order(field, zeta, S)) {
    throw dft::OrderMismatch("no root of order S in F_p'");
  }
  const TransformedFactor u_hat =
      transform_factor(field, u, zeta, column_transform);

  Poly h_cols(S * k);
  Poly x(k), y(k);
  for (std::size_t i = 0; i < S; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      x[j] = u_hat.columns[j * S + i];
      y[j] = v_hat.columns[j * S + i];
    }
    const Poly h = pointwise_y_product(field, x, y, a_mod);
    for (std::size_t j = 0; j < k; ++j) h_cols[j * S + i] = h[j];
  }

  const Element zeta_inv = field.inv(zeta);
  const Element s_inv = field.inv(field.from_u64(S));
  for (std::size_t j = 0; j < k; ++j) {
    const auto col = std::span<Element>(h_cols).subspan(j * S, S);
    column_transform(col, zeta_inv);
    dft::scale(field, col, s_inv);
  }

  ModMatrix out;
  out.rows = S;
  out.cols = k;
  out.data = transpose_poly(h_cols, k, S);
  return out;
}

ModMatrix mul_bivariate_modp(const Field& field, const ModMatrix& u,
                             const ModMatrix& v, const Element& zeta,
                             const Element& a_mod,
                             const ColumnTransform& column_transform) {
  return mul_bivariate_modp(field, u,
                            transform_factor(field, v, zeta, column_transform),
                            zeta, a_mod, column_transform);
}

Poly recombine(const Field& target, const SignedMatrix& h,
               const ChunkParams& params) {
  check_shape(h, params, "product");
  const std::size_t k = params.k;
  const std::size_t r = params.r;
  Poly out(params.S);
  for (std::size_t i = 0; i < params.S; ++i) {
    Natural pos, neg;
    for (std::size_t j = 0; j < k; ++j) {
      const SignedInt& c = h(i, j);
      const std::size_t shift = (2 * k - 2 - j) * r;
      if (c.sign() > 0) pos.add_shifted(c.magnitude(), shift);
      if (c.sign() < 0) neg.add_shifted(c.magnitude(), shift);
    }
    const SignedInt total = SignedInt(pos) - SignedInt(neg);
    out[i] = target.from(total.mod(target.modulus()));
  }
  return out;
}

ModMatrix embed(const Field& field, const NaturalMatrix& x) {
  ModMatrix out(x.rows, x.cols);
  for (std::size_t i = 0; i < x.data.size(); ++i) out.data[i] = field.from(x.data[i]);
  return out;
}

ModMatrix embed(const Field& field, const SignedMatrix& x) {
  ModMatrix out(x.rows, x.cols);
  for (std::size_t i = 0; i < x.data.size(); ++i) {
    out.data[i] = field.from_signed(x.data[i]);
  }
  return out;
}

SignedMatrix lift(const Field& field, const ModMatrix& x, const Natural& bound) {
  if (cmp(field.modulus(), bound << 1) <= 0) {
    throw LiftAmbiguity("p' = " + field.modulus().to_decimal() +
                        " does not exceed twice the coefficient bound " +
                        bound.to_decimal());
  }
  SignedMatrix out(x.rows, x.cols);
  for (std::size_t i = 0; i < x.data.size(); ++i) {
    out.data[i] = field.balanced_lift(x.data[i]);
    if (cmp(out.data[i].magnitude(), bound) > 0) {
      throw LiftAmbiguity("lifted coefficient " + out.data[i].to_decimal() +
                          " exceeds the bound " + bound.to_decimal());
    }
  }
  return out;
}

}  // namespace fftp::bivariate
