#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "repgeo/field.hpp"
#include "repgeo/group.hpp"
#include "repgeo/limits.hpp"
#include "repgeo/linalg.hpp"

namespace repgeo {

/// A finite group acting on GF(p)^dim from the right: v ∘ g = v · act(g),
/// with act(g) act(h) = act(g h). Immutable and cheap to copy.
class Representation {
 public:
  /// `act` must hold a matrix for every non-identity element; the identity
  /// acts as I. Runs the full |G|^2 multiplicativity sweep.
  static Representation make(PrimeField field, std::size_t dim, FiniteGroup group,
                             const std::map<Element, Matrix>& act);

  const PrimeField& field() const noexcept { return data_->field; }
  std::size_t dim() const noexcept { return data_->dim; }
  const FiniteGroup& group() const noexcept { return data_->group; }
  const Matrix& action(Element g) const { return data_->act.at(g); }
  const std::vector<Matrix>& actions() const noexcept { return data_->act; }

  /// |V|, or 0 if it overflows 64 bits.
  std::uint64_t space_size() const noexcept { return vector_space_size(field(), dim()); }

  bool operator==(const Representation& other) const;

 private:
  struct Data {
    PrimeField field;
    std::size_t dim;
    FiniteGroup group;
    std::vector<Matrix> act;
  };

  explicit Representation(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

Representation make_representation(PrimeField field, std::size_t dim, FiniteGroup group,
                                   const std::map<Element, Matrix>& act);

/// Every element acts as the identity.
Representation trivial_representation(PrimeField field, std::size_t dim, FiniteGroup group);

/// v ∘ g. Throws InvalidArgument on a bad index or length.
Vector act(const Representation& rep, const Vector& v, Element g);

Subgroup stabilizer(const Representation& rep, const Vector& v);

/// {g | act(g) = I}, which equals the intersection of all stabilizers.
Subgroup rep_kernel(const Representation& rep);

struct FaithfulImage {
  Representation original;
  Representation quotient;
  std::vector<Element> sigma;
};

FaithfulImage faithful_image(const Representation& rep);

struct RepHom {
  Representation source;
  Representation target;
  /// α as v ↦ v · matrix; dim(source) x dim(target).
  Matrix matrix;
  GroupHom grouphom;
};

/// act_src(g) · A = A · act_tgt(β(g)) for every g, and β a homomorphism.
bool is_rep_hom(const Representation& source, const Representation& target, const Matrix& a,
                std::span<const Element> beta);

/// second ∘ first.
RepHom compose(const RepHom& first, const RepHom& second);

/// Every homomorphism R -> S, ordered by β image table then by A entries.
/// Throws EnumerationCapExceeded when some β admits more than
/// limits.max_matrices_per_hom matrices.
std::vector<RepHom> enumerate_rep_homs(const Representation& r, const Representation& s,
                                       const Limits& limits = {});

/// An isomorphism (invertible A, bijective β) if one exists.
std::optional<RepHom> rep_isomorphic(const Representation& r, const Representation& s,
                                     const Limits& limits = {});

}  // namespace repgeo
