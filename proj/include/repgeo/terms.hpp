#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "repgeo/field.hpp"
#include "repgeo/group.hpp"
#include "repgeo/linalg.hpp"
#include "repgeo/representation.hpp"

namespace repgeo {

/// The finite generator sets X (vectors) and Y (group elements) of the free
/// representation (XKF(Y), F(Y)), together with the scalar field K.
class FreeContext {
 public:
  /// Throws InvalidArgument on empty or repeated names (across both lists).
  FreeContext(PrimeField field, std::vector<std::string> xvars, std::vector<std::string> yvars);

  const PrimeField& field() const noexcept { return data_->field; }
  const std::vector<std::string>& xvars() const noexcept { return data_->xvars; }
  const std::vector<std::string>& yvars() const noexcept { return data_->yvars; }
  std::optional<std::size_t> find_x(std::string_view name) const;
  std::optional<std::size_t> find_y(std::string_view name) const;

  bool operator==(const FreeContext& other) const;

 private:
  struct Data {
    PrimeField field;
    std::vector<std::string> xvars;
    std::vector<std::string> yvars;
  };
  std::shared_ptr<const Data> data_;
};

/// One run y_var^exponent of a word.
struct Letter {
  std::size_t var;
  long long exponent;

  bool operator==(const Letter&) const = default;
};

/// Freely reduced element of F(Y), stored run-length: adjacent runs use
/// different variables and no exponent is zero. The empty word is 1.
class GroupWord {
 public:
  explicit GroupWord(FreeContext context) : context_(std::move(context)) {}

  static GroupWord generator(FreeContext context, std::size_t var, long long exponent = 1);

  const FreeContext& context() const noexcept { return context_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool is_identity() const noexcept { return letters_.empty(); }
  /// Sum of |exponent| over runs.
  std::size_t length() const noexcept;

  bool operator==(const GroupWord& other) const {
    return letters_ == other.letters_ && context_ == other.context_;
  }

 private:
  friend GroupWord reduce_word(const FreeContext&, std::span<const Letter>);

  FreeContext context_;
  std::vector<Letter> letters_;
};

GroupWord reduce_word(const FreeContext& context, std::span<const Letter> raw);
GroupWord multiply_words(const GroupWord& u, const GroupWord& v);
GroupWord invert_word(const GroupWord& u);

/// Shortlex: shorter first, then letter by letter with
/// y1 < y1^-1 < y2 < y2^-1 < ...
std::strong_ordering shortlex_compare(const GroupWord& a, const GroupWord& b);

struct ShortlexLess {
  bool operator()(const GroupWord& a, const GroupWord& b) const { return shortlex_compare(a, b) < 0; }
};

/// Element of the group ring KF(Y): finitely many words with nonzero scalars.
class RingElement {
 public:
  using Terms = std::map<GroupWord, Scalar, ShortlexLess>;

  /// The zero element.
  explicit RingElement(FreeContext context) : context_(std::move(context)) {}

  static RingElement one(const FreeContext& context);
  static RingElement from_word(const GroupWord& word, Scalar coefficient = 1);

  const FreeContext& context() const noexcept { return context_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const GroupWord& word) const;

  /// Adds c·word in place, erasing the term if it cancels.
  void add_term(const GroupWord& word, Scalar c);

  bool operator==(const RingElement& other) const {
    return terms_ == other.terms_ && context_ == other.context_;
  }

 private:
  FreeContext context_;
  Terms terms_;
};

RingElement ring_add(const RingElement& r, const RingElement& s);
RingElement ring_sub(const RingElement& r, const RingElement& s);
RingElement ring_neg(const RingElement& r);
RingElement ring_scale(Scalar lambda, const RingElement& r);
RingElement ring_mul(const RingElement& r, const RingElement& s);

std::strong_ordering compare(const RingElement& a, const RingElement& b);

/// Element of the free module XKF(Y) = ⊕_x x·KF(Y).
class ModuleElement {
 public:
  using Parts = std::map<std::size_t, RingElement>;

  /// The zero element.
  explicit ModuleElement(FreeContext context) : context_(std::move(context)) {}

  /// x·1.
  static ModuleElement generator(const FreeContext& context, std::size_t xvar);
  /// x·r.
  static ModuleElement from_part(std::size_t xvar, const RingElement& r);

  const FreeContext& context() const noexcept { return context_; }
  const Parts& parts() const noexcept { return parts_; }
  bool is_zero() const noexcept { return parts_.empty(); }
  /// Number of (x, word) terms.
  std::size_t term_count() const noexcept;

  bool operator==(const ModuleElement& other) const {
    return parts_ == other.parts_ && context_ == other.context_;
  }

 private:
  friend ModuleElement module_add(const ModuleElement&, const ModuleElement&);
  friend ModuleElement module_scale(Scalar, const ModuleElement&);
  friend ModuleElement module_act(const ModuleElement&, const RingElement&);

  FreeContext context_;
  Parts parts_;
};

ModuleElement module_add(const ModuleElement& u, const ModuleElement& v);
ModuleElement module_sub(const ModuleElement& u, const ModuleElement& v);
ModuleElement module_neg(const ModuleElement& u);
ModuleElement module_scale(Scalar lambda, const ModuleElement& u);
/// u·r, multiplying every part by r on the right.
ModuleElement module_act(const ModuleElement& u, const RingElement& r);

std::strong_ordering compare(const ModuleElement& a, const ModuleElement& b);

inline RingElement operator+(const RingElement& a, const RingElement& b) { return ring_add(a, b); }
inline RingElement operator-(const RingElement& a, const RingElement& b) { return ring_sub(a, b); }
inline RingElement operator*(const RingElement& a, const RingElement& b) { return ring_mul(a, b); }
inline ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) { return module_add(a, b); }
inline ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) { return module_sub(a, b); }
inline ModuleElement operator*(const ModuleElement& u, const RingElement& r) { return module_act(u, r); }

/// "u = 0" or "w = 1".
class Atom {
 public:
  static Atom module_zero(ModuleElement u) { return Atom(std::move(u)); }
  static Atom group_one(GroupWord w) { return Atom(std::move(w)); }

  bool is_module() const noexcept { return std::holds_alternative<ModuleElement>(value_); }
  const ModuleElement& module() const { return std::get<ModuleElement>(value_); }
  const GroupWord& word() const { return std::get<GroupWord>(value_); }
  const FreeContext& context() const;

  bool operator==(const Atom& other) const = default;

 private:
  explicit Atom(ModuleElement u) : value_(std::move(u)) {}
  explicit Atom(GroupWord w) : value_(std::move(w)) {}

  std::variant<ModuleElement, GroupWord> value_;
};

/// (premise_1 ∧ ... ∧ premise_n) ⇒ conclusion.
class QuasiIdentity {
 public:
  /// Throws ContextMismatch unless all atoms share one context.
  QuasiIdentity(std::vector<Atom> premises, Atom conclusion);

  const std::vector<Atom>& premises() const noexcept { return premises_; }
  const Atom& conclusion() const noexcept { return conclusion_; }
  const FreeContext& context() const { return conclusion_.context(); }

  bool operator==(const QuasiIdentity&) const = default;

 private:
  std::vector<Atom> premises_;
  Atom conclusion_;
};

/// A system (T1, T2); action-type when T2 is empty. Members are sorted and
/// deduplicated.
class EquationSystem {
 public:
  explicit EquationSystem(FreeContext context, std::vector<ModuleElement> module_part = {},
                          std::vector<GroupWord> group_part = {});

  const FreeContext& context() const noexcept { return context_; }
  const std::vector<ModuleElement>& module_part() const noexcept { return module_part_; }
  const std::vector<GroupWord>& group_part() const noexcept { return group_part_; }
  bool is_action_type() const noexcept { return group_part_.empty(); }
  bool empty() const noexcept { return module_part_.empty() && group_part_.empty(); }
  std::vector<Atom> atoms() const;

  /// This system with one more equation.
  EquationSystem with(const Atom& atom) const;

  bool operator==(const EquationSystem& other) const;

 private:
  FreeContext context_;
  std::vector<ModuleElement> module_part_;
  std::vector<GroupWord> group_part_;
};

/// A point of Hom((XKF(Y), F(Y)), (V, G)): images of the generators.
struct Assignment {
  std::vector<Vector> xmap;
  std::vector<Element> ymap;

  bool operator==(const Assignment&) const = default;
};

Element eval_word(const Representation& rep, const Assignment& asg, const GroupWord& w);
Vector eval_module(const Representation& rep, const Assignment& asg, const ModuleElement& u);
bool eval_atom(const Representation& rep, const Assignment& asg, const Atom& a);

}  // namespace repgeo
