#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "repgeo/geometry.hpp"
#include "repgeo/report.hpp"

namespace repgeo {

/// V = K^2 with a swapping e1 and e2; G1 = <a>.
Representation swap_representation(const PrimeField& field);
/// Same V, G2 = <a> x <b> with b acting trivially.
Representation swap_with_kernel_representation(const PrimeField& field);

enum class ClaimStatus { confirmed, contradicted };

const char* to_string(ClaimStatus status);

struct Claim {
  std::string id;
  std::string quote;
  std::string statement;
  bool asserted;
  bool observed;
  ClaimStatus status;
  /// Certificate or witness, with its independent re-check.
  Json evidence;
  bool evidence_verified;
};

struct AuditReport {
  std::uint32_t p;
  SearchBounds bounds;
  std::vector<Claim> claims;
  std::string commentary;
};

/// p must be 2, 3 or 5.
AuditReport audit_counterexample(std::uint32_t p, const SearchBounds& bounds = {});

Json to_json(const AuditReport& report);

}  // namespace repgeo
