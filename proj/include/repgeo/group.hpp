#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "repgeo/limits.hpp"

namespace repgeo {

/// Index of a group element. Index 0 is always the identity.
using Element = std::size_t;
inline constexpr Element kIdentity = 0;

/// A finite group given by a validated Cayley table. Cheap to copy; the
/// table is shared and immutable.
class FiniteGroup {
 public:
  /// Validates the table; throws NotAGroup with a witness on failure.
  static FiniteGroup from_table(std::vector<std::string> names,
                                const std::vector<std::vector<std::size_t>>& table);

  std::size_t order() const noexcept { return data_->names.size(); }
  Element mul(Element a, Element b) const { return data_->table[a * order() + b]; }
  Element inv(Element a) const { return data_->inverses[a]; }
  /// g^e for any integer e.
  Element pow(Element g, long long e) const;
  std::size_t element_order(Element g) const { return data_->orders[g]; }

  const std::string& name(Element g) const { return data_->names.at(g); }
  const std::vector<std::string>& names() const noexcept { return data_->names; }
  std::optional<Element> find(std::string_view name) const;

  bool is_abelian() const;

  /// Same names and same table.
  bool operator==(const FiniteGroup& other) const;

 private:
  struct Data {
    std::vector<std::string> names;
    std::vector<Element> table;  // row-major, order x order
    std::vector<Element> inverses;
    std::vector<std::size_t> orders;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

FiniteGroup group_from_table(std::vector<std::string> names,
                             const std::vector<std::vector<std::size_t>>& table);

/// Z_n with elements "1", gen, gen^2, ...
FiniteGroup cyclic_group(std::size_t n, const std::string& generator = "g");

/// Direct product with pairs in lexicographic order. Names are concatenated
/// with "1" components elided ("a", "b", "ab"); if that is ambiguous the
/// full pair "a.b" form is used throughout.
FiniteGroup product_group(const FiniteGroup& g, const FiniteGroup& h);

/// A validated subgroup: contains the identity, closed under products and inverses.
class Subgroup {
 public:
  /// Throws InvalidArgument if members do not form a subgroup.
  Subgroup(FiniteGroup parent, std::vector<Element> members);

  static Subgroup whole(const FiniteGroup& parent);
  static Subgroup trivial(const FiniteGroup& parent);

  const FiniteGroup& parent() const noexcept { return parent_; }
  /// Sorted ascending; always starts with the identity.
  const std::vector<Element>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Element g) const;
  bool is_trivial() const noexcept { return members_.size() == 1; }

  /// (g, n) with g^-1 n g outside the subgroup, if any.
  std::optional<std::pair<Element, Element>> normality_witness() const;
  bool is_normal() const { return !normality_witness(); }

  bool operator==(const Subgroup& other) const { return members_ == other.members_; }

 private:
  FiniteGroup parent_;
  std::vector<Element> members_;
};

struct Quotient {
  FiniteGroup group;
  /// sigma[g] is the coset index of g.
  std::vector<Element> sigma;
};

/// G/N with cosets ordered by their least member, each named after it.
/// Throws NotNormal with a conjugation witness.
Quotient quotient_group(const FiniteGroup& g, const Subgroup& n);

struct GroupHom {
  FiniteGroup domain;
  FiniteGroup codomain;
  std::vector<Element> image;

  Element operator()(Element g) const { return image[g]; }
  bool is_injective() const;
  bool is_bijective() const;
  Subgroup kernel() const;
};

bool is_group_hom(const FiniteGroup& domain, const FiniteGroup& codomain,
                  std::span<const Element> image);

/// second ∘ first.
GroupHom compose(const GroupHom& first, const GroupHom& second);

/// Greedy generating set (smallest index not yet generated) and, for every
/// element, a word in those generators reaching it.
struct GeneratingSet {
  std::vector<Element> generators;
  /// words[g] lists generator positions whose product (left to right) is g.
  std::vector<std::vector<std::size_t>> words;
};

GeneratingSet greedy_generators(const FiniteGroup& g);

/// Every homomorphism G -> H, sorted lexicographically by image table.
std::vector<GroupHom> enumerate_group_homs(const FiniteGroup& g, const FiniteGroup& h,
                                           const Limits& limits = {});

}  // namespace repgeo
