#include "repgeo/audit.hpp"

#include <algorithm>

#include "repgeo/textio.hpp"

namespace repgeo {

namespace {

Matrix swap_matrix(const PrimeField& field) { return Matrix::from_rows(field, {{0, 1}, {1, 0}}); }

// Elements whose action matrix is literally the identity.
std::vector<std::string> direct_kernel(const Representation& rep) {
  std::vector<std::string> out;
  const auto id = Matrix::identity(rep.field(), rep.dim());
  for (Element g = 0; g < rep.group().order(); ++g) {
    if (rep.action(g).entries() == id.entries()) out.push_back(rep.group().name(g));
  }
  return out;
}

// Some v and g != 1 with v*A_g = v, by direct matrix products.
bool has_fixed_point_pair(const Representation& rep) {
  for (std::uint64_t i = 0; i < rep.space_size(); ++i) {
    Vector v = vector_from_index(rep.field(), rep.dim(), i);
    for (Element g = 1; g < rep.group().order(); ++g) {
      if (v * rep.action(g) == v) return true;
    }
  }
  return false;
}

bool projection_compatible(const FaithfulImage& image) {
  const auto& g = image.original.group();
  if (!is_group_hom(g, image.quotient.group(), image.sigma)) return false;
  for (Element e = 0; e < g.order(); ++e) {
    if (!(image.original.action(e) == image.quotient.action(image.sigma[e]))) return false;
  }
  return direct_kernel(image.quotient).size() == 1;
}

Claim make_claim(std::string id, std::string quote, std::string statement, bool asserted,
                 bool observed, Json evidence, bool verified) {
  return Claim{std::move(id),
               std::move(quote),
               std::move(statement),
               asserted,
               observed,
               asserted == observed ? ClaimStatus::confirmed : ClaimStatus::contradicted,
               std::move(evidence),
               verified};
}

Claim qid_claim(std::string id, std::string quote, std::string statement, bool asserted,
                const Representation& rep) {
  const auto q = fixed_point_qid(rep.field());
  const auto check = fulfills_qid(rep, q);
  Json evidence{{"qid", serialize(q)}, {"assignments_checked", check.assignments_checked}};
  bool verified = has_fixed_point_pair(rep) == !check.holds;
  if (check.witness) {
    const auto& w = *check.witness;
    evidence["witness"] = to_json(rep, q.context(), w);
    const Vector& x = w.xmap[0];
    const Element y = w.ymap[0];
    verified = verified && x * rep.action(y) == x && y != kIdentity;
  }
  return make_claim(std::move(id), std::move(quote), std::move(statement), asserted, check.holds,
                    std::move(evidence), verified);
}

Json separating_evidence(const Verdict& v, const Representation* r, const Representation* s,
                         bool& verified) {
  Json out = Json::object();
  if (v.inseparable) out["inseparable"] = to_json(*v.inseparable, v.inseparable_side);
  verified = false;
  if (v.separating_qid) {
    out["separating_qid"] = serialize(*v.separating_qid);
    if (r && s) verified = fulfills_qid(*r, *v.separating_qid).holds != fulfills_qid(*s, *v.separating_qid).holds;
  }
  return out;
}

}  // namespace

Representation swap_representation(const PrimeField& field) {
  auto g = cyclic_group(2, "a");
  return Representation::make(field, 2, g, {{*g.find("a"), swap_matrix(field)}});
}

Representation swap_with_kernel_representation(const PrimeField& field) {
  auto g = product_group(cyclic_group(2, "a"), cyclic_group(2, "b"));
  return Representation::make(field, 2, g,
                              {{*g.find("a"), swap_matrix(field)},
                               {*g.find("b"), Matrix::identity(field, 2)},
                               {*g.find("ab"), swap_matrix(field)}});
}

const char* to_string(ClaimStatus status) {
  return status == ClaimStatus::confirmed ? "CONFIRMED" : "CONTRADICTED";
}

AuditReport audit_counterexample(std::uint32_t p, const SearchBounds& bounds) {
  if (p != 2 && p != 3 && p != 5) throw InvalidArgument("the audit supports p = 2, 3 or 5");
  const PrimeField field(p);
  const auto r1 = swap_representation(field);
  const auto r2 = swap_with_kernel_representation(field);

  AuditReport report{p, bounds, {}, {}};

  {
    const auto image = faithful_image(r2);
    const auto iso = rep_isomorphic(image.quotient, r1);
    const auto kernel = direct_kernel(r2);
    const bool observed = kernel == std::vector<std::string>{"1", "b"} && iso.has_value();
    Json evidence{{"kernel", kernel}, {"faithful_image", to_json(image)}};
    bool verified = projection_compatible(image);
    if (iso) {
      evidence["isomorphism"] = to_json(*iso);
      verified = verified && is_rep_hom(iso->source, iso->target, iso->matrix, iso->grouphom.image) &&
                 iso->grouphom.is_bijective() && iso->matrix.is_invertible();
    }
    report.claims.push_back(make_claim(
        "C1",
        "ker(V,G2) = <b> ~= Z2; the faithful image of the representation (V,G2) is isomorphic to "
        "the representation (V1,G1)",
        "ker(V,G2) = {1, b} and the faithful image of (V,G2) is isomorphic to (V,G1)", true, observed,
        std::move(evidence), verified));
  }

  {
    const auto v = geo_equivalent(r1.group(), r2.group(), bounds);
    const bool observed = v.outcome == Outcome::equivalent;
    Json evidence = Json::object();
    bool verified = false;
    if (observed) {
      evidence["forward"] = to_json(*v.group_forward);
      evidence["backward"] = to_json(*v.group_backward);
      verified = verify_separation(*v.group_forward) && verify_separation(*v.group_backward);
    } else {
      evidence = separating_evidence(v, nullptr, nullptr, verified);
    }
    report.claims.push_back(make_claim(
        "C2", "The injections G1 -> G2 and G2 -> G1 x G1 exist. Therefore G1 ~ G2",
        "G1 and G2 are geometrically equivalent groups", true, observed, std::move(evidence),
        verified));
  }

  {
    const auto v = at_equivalent(r1, r2, bounds);
    const bool observed = v.outcome == Outcome::equivalent;
    Json evidence = Json::object();
    bool verified = false;
    if (observed) {
      evidence["first_image"] = to_json(*v.first_image);
      evidence["second_image"] = to_json(*v.second_image);
      evidence["forward"] = to_json(*v.forward);
      evidence["backward"] = to_json(*v.backward);
      verified = projection_compatible(*v.first_image) && projection_compatible(*v.second_image) &&
                 verify_separation(*v.forward) && verify_separation(*v.backward);
    } else if (v.at_witness) {
      evidence["witness"] = serialize(v.at_witness->candidate);
      verified = verify_at_witness(r1, r2, *v.at_witness);
    }
    report.claims.push_back(make_claim("C3", "So (V,G1) ~at (V,G2)",
                                       "(V,G1) and (V,G2) are action type geometrically equivalent",
                                       true, observed, std::move(evidence), verified));
  }

  report.claims.push_back(qid_claim("C4",
                                    "(V,G1) |= ((x o y - x = 0) => (y = 1)), because ker(V,G1) = {1}",
                                    "(V,G1) satisfies (x*y - x = 0) => (y = 1)", true, r1));
  report.claims.push_back(qid_claim("C5",
                                    "(V,G2) |/= ((x o y - x = 0) => (y = 1)), because ker(V,G2) != {1}",
                                    "(V,G2) satisfies (x*y - x = 0) => (y = 1)", false, r2));

  {
    const auto v = geo_equivalent(r1, r2, bounds);
    const bool observed = v.outcome == Outcome::equivalent;
    Json evidence = Json::object();
    bool verified = false;
    if (observed) {
      evidence["forward"] = to_json(*v.forward);
      evidence["backward"] = to_json(*v.backward);
      verified = verify_separation(*v.forward) && verify_separation(*v.backward);
    } else {
      evidence = separating_evidence(v, &r1, &r2, verified);
    }
    report.claims.push_back(make_claim("C6", "It means that (V1,G1) !~ (V2,G2)",
                                       "(V,G1) and (V,G2) are geometrically equivalent", false,
                                       observed, std::move(evidence), verified));
  }

  const bool r1_faithful = direct_kernel(r1).size() == 1;
  const bool r2_faithful = direct_kernel(r2).size() == 1;
  report.commentary =
      "If the premise x*y - x = 0 is read as holding for every x in V, the implication says the "
      "kernel is trivial. Under that reading (V,G1) satisfies it: " +
      std::string(r1_faithful ? "true" : "false") + "; (V,G2) satisfies it: " +
      std::string(r2_faithful ? "true" : "false") +
      ". That reading is not the semantics used above, where the premise is evaluated at a "
      "single assignment, so the vector (1,1) fixed by a refutes it on (V,G1). The embedding "
      "certificates behind C6 do not depend on the reading.";
  return report;
}

Json to_json(const AuditReport& report) {
  Json claims = Json::array();
  for (const auto& c : report.claims) {
    claims.push_back(Json{{"id", c.id},
                          {"quote", c.quote},
                          {"statement", c.statement},
                          {"asserted", c.asserted},
                          {"observed", c.observed},
                          {"status", to_string(c.status)},
                          {"evidence_verified", c.evidence_verified},
                          {"evidence", c.evidence}});
  }
  return Json{{"p", report.p}, {"claims", claims}, {"commentary", report.commentary}};
}

}  // namespace repgeo
