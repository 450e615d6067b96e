#include "fftp/bluestein.hpp"

#include <bit>
#include <memory>
#include <stdexcept>

#include "fftp/counters.hpp"

namespace fftp::bluestein {

ChirpPair make_chirp(const Field& field, const Element& omega, std::size_t S,
                     const Element& eta) {
  if (!dft::has_order(field, omega, S)) {
    throw std::invalid_argument("omega does not have order S");
  }
  if (field.mul(eta, eta) != omega) {
    throw std::invalid_argument("eta^2 != omega");
  }
  ChirpPair chirp;
  chirp.length = S;
  chirp.omega = omega;
  chirp.eta = eta;
  chirp.f_weights.resize(S);
  chirp.g_chirp.resize(S);

  const std::size_t period = 2 * S;
  const Poly powers = [&] {
    Poly out(period);
    Element cur = field.one();
    for (std::size_t e = 0; e < period; ++e) {
      out[e] = cur;
      cur = field.mul(cur, eta);
    }
    return out;
  }();
  for (std::size_t i = 0; i < S; ++i) {
    const std::size_t e = (i * i) % period;
    chirp.f_weights[i] = powers[e];
    chirp.g_chirp[i] = powers[(period - e) % period];
  }
  return chirp;
}

void short_dft_batch(const Field& field, std::span<Element> batch,
                     const ChirpPair& chirp, const BatchConvolver& convolver) {
  const std::size_t S = chirp.length;
  if (batch.size() % S != 0) {
    throw std::invalid_argument("batch is not a whole number of rows");
  }
  for (std::size_t i = 0; i < batch.size(); ++i) {
    batch[i] = field.mul(batch[i], chirp.f_weights[i % S]);
  }
  convolver(batch);
  for (std::size_t i = 0; i < batch.size(); ++i) {
    batch[i] = field.mul(batch[i], chirp.f_weights[i % S]);
  }
  detail::counters().field_muls += 2 * batch.size();
}

Poly short_dft_via_convolution(const Field& field, std::span<const Element> a,
                               const ChirpPair& chirp,
                               const BatchConvolver& convolver) {
  if (a.size() != chirp.length) {
    throw std::invalid_argument("input length does not match the chirp");
  }
  Poly out(a.begin(), a.end());
  short_dft_batch(field, std::span<Element>(out), chirp, convolver);
  return out;
}

BatchConvolver naive_convolver(const Field& field, const ChirpPair& chirp) {
  auto g = std::make_shared<const Poly>(chirp.g_chirp);
  return [&field, g](std::span<Element> rows) {
    const std::size_t S = g->size();
    for (std::size_t off = 0; off < rows.size(); off += S) {
      const auto row = rows.subspan(off, S);
      const Poly h = dft::cyclic_convolution_naive(field, row, *g);
      std::copy(h.begin(), h.end(), row.begin());
    }
  };
}

BatchConvolver ntt_convolver(const Field& field, const ChirpPair& chirp) {
  const std::size_t S = chirp.length;
  const Element root = chirp.omega;
  auto g_hat = std::make_shared<const Poly>(
      dft::dft_radix2(field, chirp.g_chirp, root));
  return [&field, g_hat, root, S](std::span<Element> rows) {
    for (std::size_t off = 0; off < rows.size(); off += S) {
      const auto row = rows.subspan(off, S);
      Poly h = dft::dft_radix2(field, row, root);
      for (std::size_t i = 0; i < S; ++i) h[i] = field.mul(h[i], (*g_hat)[i]);
      h = dft::idft(field, h, root);
      std::copy(h.begin(), h.end(), row.begin());
    }
  };
}

}  // namespace fftp::bluestein
