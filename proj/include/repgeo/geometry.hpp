#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "repgeo/group.hpp"
#include "repgeo/limits.hpp"
#include "repgeo/representation.hpp"
#include "repgeo/terms.hpp"

namespace repgeo {

/// Size of the formula space scanned by the refutation searches.
struct SearchBounds {
  std::size_t max_xvars = 1;
  std::size_t max_yvars = 1;
  std::size_t max_system_size = 1;
  std::size_t max_terms = 2;
  std::size_t max_word_length = 2;
  std::size_t max_premises = 2;

  bool operator==(const SearchBounds&) const = default;
};

/// The affine space Hom((XKF(Y), F(Y)), (V, G)) in scan order: x-images
/// major (first x most significant, vectors in index order), then y-images.
class AssignmentSpace {
 public:
  /// Throws SearchSpaceCapExceeded when |V|^|X| * |G|^|Y| > limits.max_assignments.
  AssignmentSpace(const Representation& rep, const FreeContext& context, const Limits& limits = {});

  std::uint64_t size() const noexcept { return size_; }
  Assignment at(std::uint64_t index) const;

 private:
  Representation rep_;
  std::size_t xcount_;
  std::size_t ycount_;
  std::uint64_t space_;
  std::uint64_t size_;
};

/// True when no x-variable is sent to the zero vector. Witness searches
/// prefer such assignments: a zero image makes every module atom in that
/// variable hold trivially.
bool is_nondegenerate(const Assignment& asg);

struct SolutionSet {
  EquationSystem system;
  Representation rep;
  std::vector<Assignment> solutions;
};

SolutionSet solution_set(const Representation& rep, const EquationSystem& system,
                         const Limits& limits = {});

/// A solution of `system` on which `atom` fails, if any. When absent the
/// atom lies in the two-sorted closure. An empty solution set makes every
/// atom a member.
std::optional<Assignment> closure_counterexample(const Representation& rep,
                                                 const EquationSystem& system, const Atom& atom,
                                                 const Limits& limits = {});
bool in_closure(const Representation& rep, const EquationSystem& system, const Atom& atom,
                const Limits& limits = {});

/// Action-type closure: u vanishes under every assignment solving T.
std::optional<Assignment> at_closure_counterexample(const Representation& rep,
                                                    std::span<const ModuleElement> system,
                                                    const ModuleElement& u,
                                                    const Limits& limits = {});
bool in_at_closure(const Representation& rep, std::span<const ModuleElement> system,
                   const ModuleElement& u, const Limits& limits = {});

struct QidCheck {
  bool holds = true;
  /// Least violating assignment in scan order, non-degenerate ones first.
  std::optional<Assignment> witness;
  std::uint64_t assignments_checked = 0;
};

QidCheck fulfills_qid(const Representation& rep, const QuasiIdentity& qid, const Limits& limits = {});

/// (x·y - x = 0) ⇒ (y = 1) in the context {x}, {y}.
QuasiIdentity fixed_point_qid(const PrimeField& field);

// --- point separation -------------------------------------------------------

struct InseparablePair {
  enum class Sort { vector, group };
  Sort sort;
  std::string first;
  std::string second;
};

struct GroupSeparation {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<GroupHom> homs;
  std::vector<std::string> notes;
};

struct RepSeparation {
  Representation source;
  Representation target;
  std::vector<RepHom> homs;
  std::vector<std::string> notes;
};

template <class Certificate>
struct Separation {
  std::optional<Certificate> certificate;
  std::optional<InseparablePair> inseparable;
};

/// A greedy (largest gain first) subfamily of Hom(source, target) that
/// separates all points, i.e. an embedding of the source into a finite power
/// of the target. Reports an inseparable pair when the full family fails.
Separation<GroupSeparation> separates_points(const FiniteGroup& source, const FiniteGroup& target,
                                             const Limits& limits = {});
Separation<RepSeparation> separates_points(const Representation& source,
                                           const Representation& target,
                                           const Limits& limits = {});

/// Brute-force re-check: every hom law by full sweep over elements and
/// vectors, and joint injectivity by collecting image tuples.
bool verify_separation(const GroupSeparation& cert);
bool verify_separation(const RepSeparation& cert, const Limits& limits = {});

// --- deciders ---------------------------------------------------------------

struct AtWitness {
  std::vector<ModuleElement> system;
  ModuleElement candidate;
  bool in_first;
  bool in_second;
};

enum class Outcome { equivalent, not_equivalent, unknown };

const char* to_string(Outcome outcome);

struct Verdict {
  Outcome outcome = Outcome::unknown;

  // Equivalent: embeddings first -> power(second) and second -> power(first).
  std::optional<GroupSeparation> group_forward;
  std::optional<GroupSeparation> group_backward;
  std::optional<RepSeparation> forward;
  std::optional<RepSeparation> backward;
  // Action-type chain R ~at R~ ~ S~ ~at S.
  std::optional<FaithfulImage> first_image;
  std::optional<FaithfulImage> second_image;

  // NotEquivalent evidence.
  std::optional<InseparablePair> inseparable;
  /// 0 if the inseparable pair lives in the first argument, 1 for the second.
  std::size_t inseparable_side = 0;
  std::optional<QuasiIdentity> separating_qid;
  std::optional<AtWitness> at_witness;

  SearchBounds bounds;
};

Verdict geo_equivalent(const FiniteGroup& a, const FiniteGroup& b, const SearchBounds& bounds = {},
                       const Limits& limits = {});
Verdict geo_equivalent(const Representation& a, const Representation& b,
                       const SearchBounds& bounds = {}, const Limits& limits = {});

/// Semi-decision: Equivalent via faithful images plus point separation,
/// NotEquivalent via a bounded witness, otherwise Unknown.
Verdict at_equivalent(const Representation& r, const Representation& s,
                      const SearchBounds& bounds = {}, const Limits& limits = {});

std::optional<AtWitness> find_at_witness(const Representation& r, const Representation& s,
                                         const SearchBounds& bounds = {}, const Limits& limits = {});
bool verify_at_witness(const Representation& r, const Representation& s, const AtWitness& w,
                       const Limits& limits = {});

std::optional<QuasiIdentity> find_separating_qid(const Representation& r, const Representation& s,
                                                 const SearchBounds& bounds = {},
                                                 const Limits& limits = {});
/// Group-equation-only variant for bare groups.
std::optional<QuasiIdentity> find_separating_qid(const FiniteGroup& g, const FiniteGroup& h,
                                                 const SearchBounds& bounds = {},
                                                 const Limits& limits = {});

// --- search space -----------------------------------------------------------

/// Variables x (or x1, x2, ...) and y (or y1, y2, ...).
FreeContext search_context(const PrimeField& field, std::size_t xvars, std::size_t yvars);

/// All reduced words of length <= max_length, shortlex order, identity first.
std::vector<GroupWord> enumerate_words(const FreeContext& context, std::size_t max_length);

/// Nonzero module elements with at most bounds.max_terms (x, word) terms:
/// by term count, then term positions, then coefficient tuples.
std::vector<ModuleElement> enumerate_module_candidates(const FreeContext& context,
                                                       const SearchBounds& bounds);

}  // namespace repgeo
