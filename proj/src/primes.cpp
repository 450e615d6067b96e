#include "fftp/primes.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>

#include "fftp/montgomery.hpp"

namespace fftp::primes {
namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kTrialLimit = 2048;

std::vector<std::uint64_t> small_primes_below(std::uint64_t limit) {
  std::vector<bool> composite(limit, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j < limit; j += i) composite[j] = true;
  }
  return out;
}

const std::vector<std::uint64_t>& trial_primes() {
  static const std::vector<std::uint64_t> primes =
      small_primes_below(kTrialLimit);
  return primes;
}

// Trial primes packed so each group's product fits a word; one multi-limb
// remainder per group instead of one per prime.
struct TrialGroup {
  std::uint64_t product;
  std::vector<std::uint64_t> primes;
};

const std::vector<TrialGroup>& trial_groups() {
  static const std::vector<TrialGroup> groups = [] {
    std::vector<TrialGroup> out;
    TrialGroup cur{1, {}};
    for (const std::uint64_t q : trial_primes()) {
      if (static_cast<u128>(cur.product) * q >
          std::numeric_limits<std::uint64_t>::max()) {
        out.push_back(cur);
        cur = TrialGroup{1, {}};
      }
      cur.product *= q;
      cur.primes.push_back(q);
    }
    if (!cur.primes.empty()) out.push_back(cur);
    return out;
  }();
  return groups;
}

constexpr std::uint64_t kDeterministicWitnesses[] = {2,  3,  5,  7,  11, 13,
                                                     17, 19, 23, 29, 31, 37};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t n) {
  std::uint64_t acc = 1 % n;
  base %= n;
  while (e != 0) {
    if (e & 1U) acc = mulmod(acc, base, n);
    base = mulmod(base, base, n);
    e >>= 1;
  }
  return acc;
}

// Strong probable-prime test in Montgomery form for n = d * 2^s + 1.
class StrongTester {
 public:
  explicit StrongTester(const Natural& n)
      : mont_(n),
        n_minus_1_(n - Natural(1)),
        s_(0),
        one_(mont_.one()),
        minus_one_(mont_.to_form(n_minus_1_)) {
    while (!n_minus_1_.bit(s_)) ++s_;
    d_ = n_minus_1_ >> s_;
  }

  bool passes(const Natural& base) const {
    std::vector<Limb> x = mont_.to_form(mont_.pow(base, d_));
    if (x == one_ || x == minus_one_) return true;
    for (std::size_t i = 1; i < s_; ++i) {
      mont_.mul(x, x, x);
      if (x == minus_one_) return true;
      if (x == one_) return false;
    }
    return false;
  }

  const Natural& n_minus_1() const { return n_minus_1_; }

 private:
  Montgomery mont_;
  Natural n_minus_1_;
  std::size_t s_;
  Natural d_;
  std::vector<Limb> one_;
  std::vector<Limb> minus_one_;
};

Natural random_below(std::mt19937_64& rng, const Natural& bound) {
  std::vector<Limb> limbs(bound.limb_count() + 1);
  for (Limb& l : limbs) l = rng();
  return Natural::from_limbs(std::move(limbs)) % bound;
}

const Natural& deterministic_bound() {
  // Miller-Rabin with the first twelve primes as witnesses is exact below
  // 3317044064679887385961981.
  static const Natural bound =
      Natural::from_decimal("3317044064679887385961981");
  return bound;
}

// Residues 2^m mod q for the trial primes, letting a candidate multiplier be
// rejected without building a * 2^m + 1.
class CandidateSieve {
 public:
  explicit CandidateSieve(std::size_t m) : active_(m >= 11) {
    if (!active_) return;
    for (const std::uint64_t q : trial_primes()) {
      residues_.emplace_back(q, powmod(2, m, q));
    }
  }

  bool may_be_prime(std::uint64_t a) const {
    for (const auto& [q, t] : residues_) {
      if ((mulmod(a % q, t, q) + 1) % q == 0) return false;
    }
    return true;
  }

 private:
  bool active_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> residues_;
};

Natural fft_candidate(std::size_t m, const Natural& a) {
  Natural p = a << m;
  p += Natural(1);
  return p;
}

}  // namespace

FftPrime FftPrime::make(std::size_t m, const Natural& a) {
  if (a.is_zero()) throw std::invalid_argument("FFT prime needs a >= 1");
  FftPrime out{m, a, fft_candidate(m, a)};
  if (!is_prime(out.p)) {
    throw std::invalid_argument(a.to_decimal() + " * 2^" + std::to_string(m) +
                                " + 1 is composite");
  }
  return out;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (const std::uint64_t q : kDeterministicWitnesses) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  for (const std::uint64_t a : kDeterministicWitnesses) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool is_prime(const Natural& n, const PrimalityOptions& options) {
  if (n.fits_u64()) return is_prime_u64(n.low_u64());

  // n >= 2^64 exceeds every trial prime, so any hit means composite.
  for (const TrialGroup& group : trial_groups()) {
    const std::uint64_t r = n.mod_u64(group.product);
    for (const std::uint64_t q : group.primes) {
      if (r % q == 0) return false;
    }
  }

  const StrongTester tester(n);
  if (cmp(n, deterministic_bound()) < 0) {
    for (const std::uint64_t a : kDeterministicWitnesses) {
      if (!tester.passes(Natural(a))) return false;
    }
    return true;
  }

  if (!tester.passes(Natural(2))) return false;
  std::mt19937_64 rng(options.seed);
  const Natural span = n - Natural(3);
  for (unsigned i = 0; i < options.rounds; ++i) {
    const Natural base = random_below(rng, span) + Natural(2);
    if (!tester.passes(base)) return false;
  }
  return true;
}

Natural default_a_max(std::size_t m, Ratio c) {
  const Natural scaled = Natural(c.num) * Natural(m) * Natural(m);
  if (scaled.is_zero()) return {};
  return (scaled - Natural(1)) / Natural(c.den);
}

FftPrime find_p0(std::size_t m, const Natural& a_max) {
  if (m < 1) throw std::invalid_argument("find_p0 needs m >= 1");
  const CandidateSieve sieve(m);
  for (Natural a(1); cmp(a, a_max) <= 0; a += Natural(1)) {
    if (a.fits_u64() && !sieve.may_be_prime(a.low_u64())) continue;
    Natural p = fft_candidate(m, a);
    if (is_prime(p)) return FftPrime{m, a, std::move(p)};
  }
  throw NotFound("no prime a * 2^" + std::to_string(m) + " + 1 with a <= " +
                 a_max.to_decimal());
}

FftPrime find_p0_exploratory(std::size_t m,
                             std::chrono::milliseconds timeout) {
  if (m < 1) throw std::invalid_argument("find_p0 needs m >= 1");
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  const CandidateSieve sieve(m);
  for (std::uint64_t a = 1;; ++a) {
    if ((a & 0xFF) == 0 && std::chrono::steady_clock::now() > deadline) {
      throw NotFound("timed out searching a * 2^" + std::to_string(m) +
                     " + 1 at a = " + std::to_string(a));
    }
    if (!sieve.may_be_prime(a)) continue;
    Natural p = fft_candidate(m, Natural(a));
    if (is_prime(p)) return FftPrime{m, Natural(a), std::move(p)};
  }
}

const FftPrime& least_fft_prime(std::size_t m) {
  static std::mutex mutex;
  static std::map<std::size_t, FftPrime> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  if (const auto it = cache.find(m); it != cache.end()) return it->second;
  FftPrime found = [&] {
    try {
      return find_p0(m, default_a_max(m));
    } catch (const NotFound&) {
      return find_p0_exploratory(m, std::chrono::seconds(60));
    }
  }();
  return cache.emplace(m, std::move(found)).first->second;
}

std::vector<std::uint64_t> find_all_a(std::size_t m, std::uint64_t a_max) {
  if (m < 1) throw std::invalid_argument("find_all_a needs m >= 1");
  const CandidateSieve sieve(m);
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 1; a <= a_max; ++a) {
    if (!sieve.may_be_prime(a)) continue;
    if (is_prime(fft_candidate(m, Natural(a)))) out.push_back(a);
  }
  return out;
}

// --- arithmetic progressions ---

std::uint64_t euler_phi(std::uint64_t q) {
  std::uint64_t result = q;
  std::uint64_t rest = q;
  for (std::uint64_t f = 2; f * f <= rest; ++f) {
    if (rest % f != 0) continue;
    while (rest % f == 0) rest /= f;
    result -= result / f;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

std::uint64_t least_prime_in_ap(std::uint64_t r, std::uint64_t q) {
  if (q == 0 || r == 0 || r > q) {
    throw std::invalid_argument("residue must satisfy 0 < r <= q");
  }
  if (std::gcd(r, q) != 1) {
    throw std::invalid_argument("residue " + std::to_string(r) +
                                " is not coprime to " + std::to_string(q));
  }
  for (std::uint64_t n = r;; n += q) {
    if (is_prime_u64(n)) return n;
  }
}

namespace {

// Grows on demand; primality of every n below limit().
class PrimeTable {
 public:
  bool is_prime(std::uint64_t n) {
    while (n >= composite_.size()) grow();
    return !composite_[n];
  }

 private:
  void grow() {
    const std::uint64_t limit =
        std::max<std::uint64_t>(1 << 16, 2 * composite_.size());
    composite_.assign(limit, false);
    composite_[0] = composite_[1] = true;
    for (std::uint64_t i = 2; i * i < limit; ++i) {
      if (composite_[i]) continue;
      for (std::uint64_t j = i * i; j < limit; j += i) composite_[j] = true;
    }
  }

  std::vector<bool> composite_;
};

ApRecord cover_residues(std::uint64_t q, PrimeTable& table) {
  if (q < 2) throw std::invalid_argument("P(q) needs q >= 2");
  std::vector<char> pending(q, 0);
  std::uint64_t remaining = 0;
  for (std::uint64_t r = 1; r < q; ++r) {
    if (std::gcd(r, q) == 1) {
      pending[r] = 1;
      ++remaining;
    }
  }
  ApRecord rec;
  rec.q = q;
  rec.phi = remaining;
  // Walking the primes in order, the last class to receive its first prime
  // is the one attaining the maximum.
  for (std::uint64_t n = 2; remaining > 0; ++n) {
    if (!table.is_prime(n)) continue;
    const std::uint64_t r = n % q;
    if (pending[r] == 0) continue;
    pending[r] = 0;
    --remaining;
    rec.least_prime = n;
    rec.worst_residue = r;
  }
  const std::uint64_t l = lg(q);
  const std::uint64_t den = q * l * l;
  const std::uint64_t g = std::gcd(rec.least_prime, den);
  rec.ratio_num = rec.least_prime / g;
  rec.ratio_den = den / g;
  return rec;
}

}  // namespace

int compare_ratio(const ApRecord& x, const ApRecord& y) {
  const u128 lhs = static_cast<u128>(x.ratio_num) * y.ratio_den;
  const u128 rhs = static_cast<u128>(y.ratio_num) * x.ratio_den;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

int compare_ratio(const ApRecord& x, Ratio c) {
  ApRecord as_record;
  as_record.ratio_num = c.num;
  as_record.ratio_den = c.den;
  return compare_ratio(x, as_record);
}

ApRecord p_of_q(std::uint64_t q) {
  PrimeTable table;
  return cover_residues(q, table);
}

ApScanSummary ap_scan(std::uint64_t q_max,
                      const std::function<void(const ApRecord&)>& sink,
                      Ratio c) {
  if (q_max < 2) throw std::invalid_argument("ap_scan needs q_max >= 2");
  PrimeTable table;
  ApScanSummary summary;
  for (std::uint64_t q = 2; q <= q_max; ++q) {
    const ApRecord rec = cover_residues(q, table);
    if (sink) sink(rec);
    if (q == 2 || compare_ratio(rec, summary.best) > 0) summary.best = rec;
    if (compare_ratio(rec, c) > 0) summary.exceeding.push_back(rec);
  }
  summary.max_at_q2 = summary.best.q == 2;
  return summary;
}

void write_ap_csv_header(std::ostream& out) {
  out << "q,phi_q,P_q,ratio_num,ratio_den\n";
}

void write_ap_csv_row(std::ostream& out, const ApRecord& record) {
  out << record.q << ',' << record.phi << ',' << record.least_prime << ','
      << record.ratio_num << ',' << record.ratio_den << '\n';
}

}  // namespace fftp::primes
