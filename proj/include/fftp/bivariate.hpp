#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fftp/dft.hpp"

namespace fftp::bivariate {

using dft::Element;
using dft::Field;
using dft::Poly;

// A coefficient of a product fell outside the range the lift can resolve.
class LiftAmbiguity : public std::range_error {
 public:
  using std::range_error::range_error;
};

// Chunking of residues mod p = a * 2^m + 1 into k pieces of r = m / k bits,
// for polynomials of X-length S.
struct ChunkParams {
  std::size_t k = 1;
  std::size_t r = 0;
  Natural a;
  std::size_t m = 0;
  std::size_t S = 1;

  // Requires k >= 1 dividing prime.m.
  static ChunkParams make(const primes::FftPrime& prime, std::size_t k,
                          std::size_t S);

  // 2^(2r) * S * k * a^3, the bound on every product coefficient.
  Natural coefficient_bound() const;
};

// Row-major rows x cols matrix; row i holds the Y-coefficients of the
// X^i term.
template <typename T>
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const T& fill = T{})
      : rows(r), cols(c), data(r * c, fill) {}

  T& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data[i * cols + j];
  }
  std::span<T> row(std::size_t i) { return {data.data() + i * cols, cols}; }
  std::span<const T> row(std::size_t i) const {
    return {data.data() + i * cols, cols};
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

using NaturalMatrix = Matrix<Natural>;
using SignedMatrix = Matrix<SignedInt>;
using ModMatrix = Matrix<Element>;

// Entry (i, j) is the j-th r-bit chunk of f_i counted from the top:
// f_i = sum_j entry(i, j) 2^((k-1-j) r); chunk 0 keeps everything above.
NaturalMatrix split(const Field& field, std::span<const Element> f,
                    const ChunkParams& params);
NaturalMatrix split(std::span<const Natural> f, const ChunkParams& params);

// Exact product in Z[X, Y] / (X^S - 1, Y^k + a) by double convolution.
SignedMatrix mul_bivariate_integer(const NaturalMatrix& f,
                                   const NaturalMatrix& g,
                                   const ChunkParams& params);
SignedMatrix mul_bivariate_integer(const SignedMatrix& f,
                                   const SignedMatrix& g,
                                   const ChunkParams& params);

// x * y in F[Y] / (Y^k + a) by Karatsuba on the coefficient sequences;
// a_mod is a reduced into the field.
Poly pointwise_y_product(const Field& field, std::span<const Element> x,
                         std::span<const Element> y, const Element& a_mod);

// Transforms `column` (length S) in place with respect to `root`.
using ColumnTransform =
    std::function<void(std::span<Element> column, const Element& root)>;

ColumnTransform radix2_column_transform(const Field& field);

// Transforms of the Y-coefficient columns of a fixed right factor, reused
// across many left factors.
struct TransformedFactor {
  std::size_t S = 0;
  std::size_t k = 0;
  Poly columns;  // k x S, column j transformed
};

TransformedFactor transform_factor(const Field& field, const ModMatrix& v,
                                   const Element& zeta,
                                   const ColumnTransform& column_transform);

// u * v in F_p'[X, Y] / (X^S - 1, Y^k + a): forward transforms of each
// Y-column over X, pointwise products in F_p'[Y] / (Y^k + a), inverse
// transforms. zeta must have order S in F_p'.
ModMatrix mul_bivariate_modp(const Field& field, const ModMatrix& u,
                             const TransformedFactor& v_hat,
                             const Element& zeta, const Element& a_mod,
                             const ColumnTransform& column_transform);
ModMatrix mul_bivariate_modp(const Field& field, const ModMatrix& u,
                             const ModMatrix& v, const Element& zeta,
                             const Element& a_mod,
                             const ColumnTransform& column_transform);

// h_i = sum_j h(i, j) 2^((2k-2-j) r) mod p, accumulated by overlap-add and
// reduced once.
Poly recombine(const Field& target, const SignedMatrix& h,
               const ChunkParams& params);

ModMatrix embed(const Field& field, const NaturalMatrix& x);
ModMatrix embed(const Field& field, const SignedMatrix& x);

// Balanced representatives. Throws LiftAmbiguity when p' <= 2 * bound or an
// entry lifts outside [-bound, bound].
SignedMatrix lift(const Field& field, const ModMatrix& x, const Natural& bound);

}  // namespace fftp::bivariate
