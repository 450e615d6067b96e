#pragma once

#include <functional>
#include <span>

#include "fftp/dft.hpp"

namespace fftp::bluestein {

using dft::Element;
using dft::Field;
using dft::Poly;

// Tables for rewriting a length-S transform with respect to omega as a
// cyclic convolution: omega^(ij) = eta^(i^2) eta^(j^2) eta^(-(i-j)^2).
struct ChirpPair {
  std::size_t length = 1;  // S
  Element omega;
  Element eta;  // eta^2 = omega
  Poly f_weights;  // eta^(i^2 mod 2S)
  Poly g_chirp;    // eta^(-(i^2) mod 2S)
};

// Requires omega of order S (a power of two) and eta^2 = omega; throws
// std::invalid_argument otherwise.
ChirpPair make_chirp(const Field& field, const Element& omega, std::size_t S,
                     const Element& eta);

// Cyclic convolution of each length-S row of `rows` with the fixed kernel g,
// written back in place.
using BatchConvolver = std::function<void(std::span<Element> rows)>;

// Transforms every length-S row of `batch` in place: weight by eta^(i^2),
// convolve with the chirp, weight again.
void short_dft_batch(const Field& field, std::span<Element> batch,
                     const ChirpPair& chirp, const BatchConvolver& convolver);

Poly short_dft_via_convolution(const Field& field, std::span<const Element> a,
                               const ChirpPair& chirp,
                               const BatchConvolver& convolver);

// Convolver backed by cyclic_convolution_naive against chirp.g_chirp.
BatchConvolver naive_convolver(const Field& field, const ChirpPair& chirp);

// Convolver using radix-2 transforms of length S over the same field.
BatchConvolver ntt_convolver(const Field& field, const ChirpPair& chirp);

}  // namespace fftp::bluestein
