#include "terracini/field.hpp"

#include <array>
#include <stdexcept>

namespace terracini {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t RandomSource::next_u64() {
  std::uint64_t v = mix64(seed_ ^ mix64(counter_));
  ++counter_;
  return v;
}

std::uint64_t RandomSource::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: zero bound");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  for (;;) {
    std::uint64_t v = next_u64();
    if (v <= limit) return v % bound;
  }
}

RandomSource RandomSource::derive(std::uint64_t tag) const {
  return RandomSource(mix64(seed_ ^ mix64(tag ^ 0x5851f42d4c957f2dULL)));
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p <= kMinPrime || p >= (std::uint64_t{1} << 63) || !is_prime_u64(p))
    throw std::invalid_argument("PrimeField: modulus must be a prime in (2^40, 2^63), got " +
                                std::to_string(p));
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p_;
  std::uint64_t m = (static_cast<std::uint64_t>(-(v + 1)) + 1) % p_;
  return neg(m);
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
  return pow_mod(a, p_ - 2, p_);
}

std::string PrimeField::name() const { return "prime:" + std::to_string(p_); }

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw std::domain_error("RationalField: inverse of zero");
  mpq_class r = 1 / a;
  return r;
}

RationalField::Element RationalField::sample_nonzero(RandomSource& rng) const {
  const auto h = static_cast<std::uint64_t>(kRationalSampleHeight);
  std::uint64_t v = rng.uniform_below(2 * h);
  std::int64_t x = v < h ? -static_cast<std::int64_t>(v + 1) : static_cast<std::int64_t>(v - h + 1);
  return from_int(x);
}

ArithmeticDomain ArithmeticDomain::prime_field(std::uint64_t p) {
  PrimeField check(p);
  return {Kind::PrimeField, check.modulus()};
}

std::string ArithmeticDomain::name() const {
  return is_rational() ? "rational" : "prime:" + std::to_string(prime);
}

}  // namespace terracini
