#include "fftp/transform.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <mutex>
#include <sstream>

#include "fftp/bluestein.hpp"

namespace fftp::transform {
namespace {

using bivariate::ChunkParams;
using bivariate::ModMatrix;

std::size_t ceil_div(std::size_t x, std::size_t y) { return (x + y - 1) / y; }

std::size_t cube(std::size_t x) { return x * x * x; }

std::size_t parse_size(std::string_view key, std::string_view value) {
  std::size_t out = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw std::invalid_argument("profile: bad value for " + std::string(key) +
                                ": '" + std::string(value) + "'");
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// eta with eta^2 = zeta^(L/S), and the S actually used.
std::optional<std::pair<std::size_t, Element>> chirp_root(
    const Field& field, std::size_t L, std::size_t S, const Element& zeta) {
  if (2 * S <= L) return std::pair{S, field.pow(zeta, L / (2 * S))};
  if (auto eta = field.sqrt_two_power(zeta)) return std::pair{S, *eta};
  // zeta generates the whole 2-part of F_p^*; halve S instead.
  if (L >= 4) return std::pair{L / 2, zeta};
  return std::nullopt;
}

Poly transform_at(const Field& field, std::span<const Element> f,
                  const Element& zeta, const Profile& profile,
                  std::size_t depth);

void transform_in_place(const Field& field, std::span<Element> column,
                        const Element& root, const Profile& profile,
                        std::size_t depth) {
  const Poly out = transform_at(field, column, root, profile, depth);
  std::copy(out.begin(), out.end(), column.begin());
}

Poly recursive_step(const Field& field, std::span<const Element> f,
                    const Element& zeta, const Profile& profile,
                    std::size_t depth, std::size_t S, const Element& eta) {
  const std::size_t L = f.size();
  const dft::CtPlan plan = dft::make_ct_plan(field, L, S, zeta);
  const bluestein::ChirpPair chirp = bluestein::make_chirp(field, plan.omega, S, eta);
  const RecursionParams rp = derive_recursion_params(field, S, profile, depth);
  const Field& small = *rp.field_prime;
  const Element a_mod = small.from(rp.chunks.a);

  const bivariate::ColumnTransform column =
      [&](std::span<Element> col, const Element& root) {
        ++detail::counters().recursions;
        transform_in_place(small, col, root, profile, depth + 1);
      };

  const bivariate::TransformedFactor g_hat = bivariate::transform_factor(
      small, bivariate::embed(small, bivariate::split(field, chirp.g_chirp, rp.chunks)),
      rp.zeta_prime, column);

  const bluestein::BatchConvolver convolver = [&](std::span<Element> rows) {
    for (std::size_t off = 0; off < rows.size(); off += S) {
      const auto row = rows.subspan(off, S);
      const ModMatrix u =
          bivariate::embed(small, bivariate::split(field, row, rp.chunks));
      const ModMatrix h = bivariate::mul_bivariate_modp(
          small, u, g_hat, rp.zeta_prime, a_mod, column);
      const Poly out = bivariate::recombine(
          field, bivariate::lift(small, h, rp.bound), rp.chunks);
      std::copy(out.begin(), out.end(), row.begin());
    }
  };

  return dft::dft_cooley_tukey(
      field, f, plan, [&](std::span<Element> batch) {
        bluestein::short_dft_batch(field, batch, chirp, convolver);
      });
}

Poly transform_at(const Field& field, std::span<const Element> f,
                  const Element& zeta, const Profile& profile,
                  std::size_t depth) {
  const std::size_t L = f.size();
  if (L == 0 || !std::has_single_bit(L)) {
    throw std::invalid_argument("transform length must be a power of two");
  }
  auto& counters = detail::counters();
  counters.max_depth = std::max<std::uint64_t>(counters.max_depth, depth);

  const std::size_t m = field.prime().m;
  if (L < 2 || depth >= profile.max_depth || m <= profile.base_case_threshold) {
    return dft::dft_radix2(field, f, zeta);
  }
  if (!dft::has_order(field, zeta, L)) {
    throw dft::OrderMismatch("root does not have order " + std::to_string(L));
  }

  std::size_t S = 0;
  if (profile.mode == Mode::paper_faithful) {
    check_paper_faithful(m, L);
    S = std::size_t{1} << (lg(std::uint64_t{m}) * lg(std::uint64_t{m}));
  } else if (profile.short_length && depth == 0) {
    S = *profile.short_length;
    if (S < 2 || S > L || !std::has_single_bit(S)) {
      throw std::invalid_argument("short length must be a power of two in [2, L]");
    }
  } else {
    S = default_short_length(L);
  }

  const auto root = chirp_root(field, L, S, zeta);
  if (!root) return dft::dft_radix2(field, f, zeta);
  return recursive_step(field, f, zeta, profile, depth, root->first,
                        root->second);
}

}  // namespace

AdmissibleSize admissible_from_k(std::size_t k) {
  if (k < 2) throw std::invalid_argument("admissible size needs k >= 2");
  const std::size_t r = cube(lg(std::uint64_t{k}));
  return {k, r, k * r};
}

std::optional<AdmissibleSize> admissible_for_m(std::size_t m) {
  for (std::size_t k = 2; k <= m; ++k) {
    const AdmissibleSize s = admissible_from_k(k);
    if (s.m == m) return s;
    if (s.m > m) break;
  }
  return std::nullopt;
}

AdmissibleSize least_admissible_above(std::size_t bound) {
  for (std::size_t k = 2;; ++k) {
    const AdmissibleSize s = admissible_from_k(k);
    if (s.m > bound) return s;
  }
}

std::string to_string(Mode mode) {
  return mode == Mode::paper_faithful ? "paper_faithful" : "test_scale";
}

Profile Profile::base_case() {
  Profile p;
  p.max_depth = 0;
  return p;
}

Profile Profile::single_recursion() {
  Profile p;
  p.max_depth = 1;
  return p;
}

Profile Profile::double_recursion() {
  Profile p;
  p.max_depth = 2;
  return p;
}

Profile Profile::paper_faithful() {
  Profile p;
  p.mode = Mode::paper_faithful;
  p.base_case_threshold = std::size_t{1} << 17;
  p.max_depth = 64;
  return p;
}

std::string Profile::serialize() const {
  std::ostringstream out;
  out << "mode=" << to_string(mode) << '\n';
  out << "base_case_threshold=" << base_case_threshold << '\n';
  out << "max_depth=" << max_depth << '\n';
  if (short_length) out << "short_length=" << *short_length << '\n';
  if (chunk_count) out << "chunk_count=" << *chunk_count << '\n';
  if (m_prime) out << "m_prime=" << *m_prime << '\n';
  return out.str();
}

Profile Profile::parse(std::string_view text) {
  Profile p;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("profile: expected key=value, got '" +
                                  std::string(line) + "'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "mode") {
      if (value == "paper_faithful") {
        p.mode = Mode::paper_faithful;
      } else if (value == "test_scale") {
        p.mode = Mode::test_scale;
      } else {
        throw std::invalid_argument("profile: unknown mode '" +
                                    std::string(value) + "'");
      }
    } else if (key == "base_case_threshold") {
      p.base_case_threshold = parse_size(key, value);
    } else if (key == "max_depth") {
      p.max_depth = parse_size(key, value);
    } else if (key == "short_length") {
      p.short_length = parse_size(key, value);
    } else if (key == "chunk_count") {
      p.chunk_count = parse_size(key, value);
    } else if (key == "m_prime") {
      p.m_prime = parse_size(key, value);
    } else {
      throw std::invalid_argument("profile: unknown key '" + std::string(key) +
                                  "'");
    }
  }
  return p;
}

RecursionSizes derive_recursion_sizes(std::size_t m) {
  RecursionSizes s;
  s.beta = 2 * cube(lg(std::uint64_t{m}));
  s.lg_beta = lg(std::uint64_t{s.beta});
  s.lg_lg_beta = lg(std::uint64_t{s.lg_beta});
  if (s.lg_beta < 3 * s.lg_lg_beta + 1) {
    throw ParameterInfeasible("lg beta - 3 lg lg beta < 1 for m = " +
                              std::to_string(m));
  }
  s.k_prime = ceil_div(s.beta, cube(s.lg_beta - 3 * s.lg_lg_beta));
  s.m_prime = s.k_prime < 2 ? 0 : admissible_from_k(s.k_prime).m;
  return s;
}

std::shared_ptr<const Field> field_for(std::size_t m) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const Field>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  auto field = std::make_shared<const Field>(primes::least_fft_prime(m));
  std::lock_guard lock(mutex);
  return cache.emplace(m, std::move(field)).first->second;
}

std::size_t default_chunk_count(std::size_t m) {
  std::size_t best = 1;
  for (std::size_t k = 1; k * k <= m; ++k) {
    if (m % k == 0) best = k;
  }
  return best;
}

std::size_t default_short_length(std::size_t L) {
  const std::size_t lglg = lg(std::uint64_t{lg(std::uint64_t{L})});
  const std::size_t e = 2 * lglg;
  const std::size_t S = e >= 63 ? L : std::min(L, std::size_t{1} << e);
  return std::max<std::size_t>(S, std::min<std::size_t>(2, L));
}

std::size_t select_m_prime(const Natural& bound, std::size_t S,
                           std::size_t multiple_of) {
  std::size_t m = std::max<std::size_t>(
      {(bound << 1).bit_length(), lg(std::uint64_t{S}), 1});
  if (multiple_of > 1) m = ceil_div(m, multiple_of) * multiple_of;
  return m;
}

void check_paper_faithful(std::size_t m, std::size_t L) {
  if (!admissible_for_m(m)) {
    throw ParameterInfeasible("m = " + std::to_string(m) +
                              " is not of the form k (lg k)^3");
  }
  if (m <= (std::size_t{1} << 17)) {
    throw ParameterInfeasible("m > 2^17 fails for m = " + std::to_string(m));
  }
  const std::size_t lg_m = lg(std::uint64_t{m});
  const std::size_t lg_l = lg(std::uint64_t{L});
  if (!(lg_m * lg_m * lg_m * lg_m < lg_l)) {
    throw ParameterInfeasible("(lg m)^4 < lg L fails: lg m = " +
                              std::to_string(lg_m) + ", lg L = " +
                              std::to_string(lg_l));
  }
  if (!(lg_l < m)) {
    throw ParameterInfeasible("lg L < m fails");
  }
}

RecursionParams derive_recursion_params(const Field& field, std::size_t S,
                                        const Profile& profile,
                                        std::size_t depth) {
  const primes::FftPrime& prime = field.prime();
  RecursionParams rp;
  rp.S = S;

  if (profile.mode == Mode::paper_faithful) {
    const auto adm = admissible_for_m(prime.m);
    if (!adm) {
      throw ParameterInfeasible("m = " + std::to_string(prime.m) +
                                " is not admissible");
    }
    rp.chunks = ChunkParams::make(prime, adm->k, S);
    const RecursionSizes sizes = derive_recursion_sizes(prime.m);
    rp.beta = sizes.beta;
    rp.m_prime = sizes.m_prime;
  } else {
    const std::size_t k =
        profile.chunk_count ? *profile.chunk_count : default_chunk_count(prime.m);
    rp.chunks = ChunkParams::make(prime, k, S);
    rp.m_prime = 0;
  }
  rp.bound = rp.chunks.coefficient_bound();
  if (profile.mode == Mode::test_scale) {
    rp.beta = (rp.bound << 1).bit_length();
    if (profile.m_prime && depth == 0) {
      rp.m_prime = *profile.m_prime;
    } else {
      rp.m_prime = select_m_prime(rp.bound, S, profile.chunk_count.value_or(1));
    }
  }
  if (rp.m_prime < lg(std::uint64_t{S})) {
    throw ParameterInfeasible("m' = " + std::to_string(rp.m_prime) +
                              " leaves no root of order S = " +
                              std::to_string(S) + " in F_p'");
  }
  try {
    rp.field_prime = field_for(rp.m_prime);
  } catch (const std::invalid_argument& e) {
    throw ParameterInfeasible("p' for m' = " + std::to_string(rp.m_prime) +
                              " is unusable: " + e.what());
  }
  if (cmp(rp.field_prime->modulus(), rp.bound << 1) <= 0) {
    throw ParameterInfeasible("p' = " + rp.field_prime->modulus().to_decimal() +
                              " does not exceed 2 * bound = " +
                              (rp.bound << 1).to_decimal());
  }
  rp.zeta_prime = rp.field_prime->root_of_unity(S);
  return rp;
}

Poly transform(const Field& field, std::span<const Element> f,
               const Element& zeta, const Profile& profile) {
  return transform_at(field, f, zeta, profile, 0);
}

Poly inverse_transform(const Field& field, std::span<const Element> f,
                       const Element& zeta, const Profile& profile) {
  Poly out = transform(field, f, field.inv(zeta), profile);
  dft::scale(field, out, field.inv(field.from_u64(f.size())));
  return out;
}

}  // namespace fftp::transform
