#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fftp/fp.hpp"

namespace fftp::dft {

using fp::Element;
using fp::Field;

// Coefficients of a polynomial in F_p[X]/(X^L - 1), or its transform.
using Poly = std::vector<Element>;

// The supplied root does not have the multiplicative order the transform
// length requires.
class OrderMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// root^order = 1 and, for order >= 2, root^(order/2) != 1.
bool has_order(const Field& field, const Element& root, std::size_t order);

// Evaluates f at 1, zeta, ..., zeta^(L-1) directly. O(L^2); the reference
// every other engine is checked against.
Poly dft_naive(const Field& field, std::span<const Element> f,
               const Element& zeta);

// Iterative radix-2 transform; output in natural order.
Poly dft_radix2(const Field& field, std::span<const Element> f,
                const Element& zeta);

// Inverse transform: the forward transform with zeta^-1, divided by L.
Poly idft(const Field& field, std::span<const Element> transformed,
          const Element& zeta);

// h_i = sum over i1 + i2 = i (mod L) of f_i1 g_i2.
Poly cyclic_convolution_naive(const Field& field, std::span<const Element> f,
                              std::span<const Element> g);

void scale(const Field& field, std::span<Element> values,
           const Element& factor);

// Row-major rows x cols matrix to its cols x rows transpose.
template <typename T>
void transpose(std::span<const T> in, std::span<T> out, std::size_t rows,
               std::size_t cols) {
  if (in.size() != rows * cols || out.size() != rows * cols) {
    throw std::invalid_argument("transpose: size does not match shape");
  }
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[j * rows + i] = in[i * cols + j];
  }
}

template <typename T>
std::vector<T> transpose(std::span<const T> in, std::size_t rows,
                         std::size_t cols) {
  std::vector<T> out(in.size());
  transpose<T>(in, std::span<T>(out), rows, cols);
  return out;
}

// Transforms every consecutive length-S block of `batch` in place, with
// respect to the plan's omega.
using ShortEngine = std::function<void(std::span<Element> batch)>;

// Cooley-Tukey factorisation L = S^d * 2^d'.
struct CtPlan {
  struct Level {
    std::size_t block = 1;  // sub-transform length N at this level
    std::size_t radix = 1;  // S or 2
    // twiddles[j2 * radix + k1] = zeta_N^(j2 * k1), zeta_N of order N.
    std::vector<Element> twiddles;
  };

  std::size_t length = 1;  // L
  std::size_t short_length = 2;  // S
  std::size_t short_layers = 0;  // d
  std::size_t radix2_layers = 0;  // d'
  Element zeta;
  Element omega;  // zeta^(L/S)
  std::vector<Level> levels;
};

// Requires L and S powers of two with 2 <= S <= L (or L = 1), and zeta of
// order L.
CtPlan make_ct_plan(const Field& field, std::size_t length,
                    std::size_t short_length, const Element& zeta);

// d layers of L/S short transforms (delegated to the engine) followed by d'
// layers of butterflies, with twiddle multiplications between layers. Each
// layer works on contiguous rows produced by an explicit transpose.
Poly dft_cooley_tukey(const Field& field, std::span<const Element> f,
                      const CtPlan& plan, const ShortEngine& short_engine);

ShortEngine naive_short_engine(const Field& field, const Element& omega,
                               std::size_t short_length);
ShortEngine radix2_short_engine(const Field& field, const Element& omega,
                                std::size_t short_length);

}  // namespace fftp::dft
