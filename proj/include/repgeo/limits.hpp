#pragma once

#include <cstddef>
#include <cstdint>

namespace repgeo {

/// Guardrails for every exhaustive search. Exceeding one is an error, never
/// a silent truncation.
struct Limits {
  std::size_t max_group_order = 256;
  std::size_t max_dim = 8;
  /// Matrices enumerated per group homomorphism in enumerate_rep_homs.
  std::uint64_t max_matrices_per_hom = std::uint64_t{1} << 20;
  /// |V|^|X| * |G|^|Y| for assignment scans.
  std::uint64_t max_assignments = std::uint64_t{1} << 24;
};

/// a*b, or 0 when the product overflows.
constexpr std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) noexcept {
  if (a != 0 && b > UINT64_MAX / a) return 0;
  return a * b;
}

/// base^exp, or 0 on overflow.
constexpr std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) noexcept {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    r = checked_mul(r, base);
    if (r == 0) return 0;
  }
  return r;
}

}  // namespace repgeo
