#include "repgeo/field.hpp"

#include <string>

#include "repgeo/errors.hpp"

namespace repgeo {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > kMaxPrime || !is_prime(p)) {
    throw InvalidArgument("field modulus must be a prime in [2, 97], got " + std::to_string(p));
  }
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw InvalidArgument("zero has no inverse");
  // Fermat: a^(p-2).
  Scalar result = 1;
  Scalar base = a % p_;
  for (std::uint32_t e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

}  // namespace repgeo
