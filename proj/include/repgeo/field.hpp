#pragma once

#include <cstdint>

namespace repgeo {

using Scalar = std::uint32_t;

/// The prime field GF(p), 2 <= p <= 97.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxPrime = 97;

  /// Throws InvalidArgument unless p is a prime in [2, kMaxPrime].
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }
  std::uint64_t size() const noexcept { return p_; }

  Scalar reduce(long long value) const noexcept {
    long long r = value % static_cast<long long>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const noexcept { return (a + b) % p_; }
  Scalar sub(Scalar a, Scalar b) const noexcept { return (a + p_ - b) % p_; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept { return (a * b) % p_; }
  /// Throws InvalidArgument on zero.
  Scalar inv(Scalar a) const;

  /// Representative in (-p/2, p/2], used for display.
  long long signed_value(Scalar a) const noexcept {
    return 2 * a > p_ ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
  }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n) noexcept;

}  // namespace repgeo
