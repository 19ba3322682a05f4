#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace terracini {

inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;
inline constexpr std::uint64_t kMinPrime = std::uint64_t{1} << 40;

// Half-width of the integer box used to sample nonzero rationals.
inline constexpr std::int64_t kRationalSampleHeight = std::int64_t{1} << 20;

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

// Counter-based deterministic stream (splitmix64 of seed and counter).
// Single owner; copy it to fork an identical stream, derive() to fork an
// independent one.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t counter = 0)
      : seed_(seed), counter_(counter) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  std::uint64_t next_u64();

  // Uniform in [0, bound). bound must be nonzero.
  std::uint64_t uniform_below(std::uint64_t bound);

  // A fresh stream whose seed mixes this seed with `tag`. Does not advance.
  RandomSource derive(std::uint64_t tag) const;

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

std::uint64_t mix64(std::uint64_t x);

// Z/pZ for a prime 2^40 < p < 2^63. Elements are canonical residues.
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const;

  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<unsigned __int128>(a) * b % p_);
  }
  Element inv(Element a) const;

  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }

  // Uniform over the nonzero residues.
  Element sample_nonzero(RandomSource& rng) const { return 1 + rng.uniform_below(p_ - 1); }

  std::string to_string(Element a) const { return std::to_string(a); }
  std::string name() const;

 private:
  std::uint64_t p_;
};

// The rationals, via GMP.
class RationalField {
 public:
  using Element = mpq_class;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const { return mpq_class(mpz_class(std::to_string(v))); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  // Uniform over [-H, -1] u [1, H] with H = kRationalSampleHeight.
  Element sample_nonzero(RandomSource& rng) const;

  std::string to_string(const Element& a) const { return a.get_str(); }
  std::string name() const { return "rational"; }
};

// Runtime choice of arithmetic domain.
struct ArithmeticDomain {
  enum class Kind { PrimeField, Rational };

  Kind kind = Kind::PrimeField;
  std::uint64_t prime = kDefaultPrime;

  static ArithmeticDomain prime_field(std::uint64_t p = kDefaultPrime);
  static ArithmeticDomain rational() { return {Kind::Rational, 0}; }

  bool is_rational() const { return kind == Kind::Rational; }
  std::string name() const;

  friend bool operator==(const ArithmeticDomain&, const ArithmeticDomain&) = default;
};

template <class Fn>
decltype(auto) visit_domain(const ArithmeticDomain& dom, Fn&& fn) {
  if (dom.kind == ArithmeticDomain::Kind::Rational) return std::forward<Fn>(fn)(RationalField{});
  return std::forward<Fn>(fn)(PrimeField{dom.prime});
}

template <class F>
using Vec = std::vector<typename F::Element>;

// `dim` nonzero elements drawn independently from the field's sampler.
template <class F>
Vec<F> sample_point(std::size_t dim, RandomSource& rng, const F& field) {
  Vec<F> v;
  v.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) v.push_back(field.sample_nonzero(rng));
  return v;
}

// Row-major dense matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  const std::vector<T>& entries() const { return entries_; }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

// Horizontal concatenation; all blocks must share a row count.
template <class T>
DenseMatrix<T> hconcat(std::span<const DenseMatrix<T>> blocks) {
  if (blocks.empty()) return {};
  std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("hconcat: row count mismatch");
    cols += b.cols();
  }
  DenseMatrix<T> out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, offset + c) = b(r, c);
    offset += b.cols();
  }
  return out;
}

}  // namespace terracini
