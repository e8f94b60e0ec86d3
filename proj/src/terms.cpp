#include "repgeo/terms.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "repgeo/errors.hpp"

namespace repgeo {

namespace {

void require_same(const FreeContext& a, const FreeContext& b) {
  if (!(a == b)) throw ContextMismatch("operands belong to different free contexts");
}

}  // namespace

FreeContext::FreeContext(PrimeField field, std::vector<std::string> xvars,
                         std::vector<std::string> yvars) {
  std::set<std::string> seen;
  for (const auto* list : {&xvars, &yvars}) {
    for (const auto& name : *list) {
      if (name.empty()) throw InvalidArgument("empty variable name");
      if (!seen.insert(name).second) throw InvalidArgument("duplicate variable name '" + name + "'");
    }
  }
  data_ = std::make_shared<const Data>(Data{field, std::move(xvars), std::move(yvars)});
}

std::optional<std::size_t> FreeContext::find_x(std::string_view name) const {
  auto it = std::find(xvars().begin(), xvars().end(), name);
  if (it == xvars().end()) return std::nullopt;
  return static_cast<std::size_t>(it - xvars().begin());
}

std::optional<std::size_t> FreeContext::find_y(std::string_view name) const {
  auto it = std::find(yvars().begin(), yvars().end(), name);
  if (it == yvars().end()) return std::nullopt;
  return static_cast<std::size_t>(it - yvars().begin());
}

bool FreeContext::operator==(const FreeContext& other) const {
  if (data_ == other.data_) return true;
  return data_->field == other.data_->field && data_->xvars == other.data_->xvars &&
         data_->yvars == other.data_->yvars;
}

// --- F(Y) -------------------------------------------------------------------

GroupWord GroupWord::generator(FreeContext context, std::size_t var, long long exponent) {
  if (var >= context.yvars().size()) throw InvalidArgument("group variable index out of range");
  Letter l{var, exponent};
  return reduce_word(context, std::span<const Letter>(&l, 1));
}

std::size_t GroupWord::length() const noexcept {
  std::size_t n = 0;
  for (const auto& l : letters_) n += static_cast<std::size_t>(std::llabs(l.exponent));
  return n;
}

GroupWord reduce_word(const FreeContext& context, std::span<const Letter> raw) {
  GroupWord w(context);
  auto& out = w.letters_;
  for (const auto& l : raw) {
    if (l.var >= context.yvars().size()) throw InvalidArgument("group variable index out of range");
    if (l.exponent == 0) continue;
    if (!out.empty() && out.back().var == l.var) {
      out.back().exponent += l.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return w;
}

GroupWord multiply_words(const GroupWord& u, const GroupWord& v) {
  require_same(u.context(), v.context());
  std::vector<Letter> raw = u.letters();
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return reduce_word(u.context(), raw);
}

GroupWord invert_word(const GroupWord& u) {
  std::vector<Letter> raw(u.letters().rbegin(), u.letters().rend());
  for (auto& l : raw) l.exponent = -l.exponent;
  return reduce_word(u.context(), raw);
}

std::strong_ordering shortlex_compare(const GroupWord& a, const GroupWord& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  // Walk both run-length encodings one unit letter at a time.
  auto key = [](const Letter& l) { return l.var * 2 + (l.exponent < 0 ? 1 : 0); };
  std::size_t ia = 0, ib = 0;
  long long used_a = 0, used_b = 0;
  const auto& la = a.letters();
  const auto& lb = b.letters();
  while (ia < la.size() && ib < lb.size()) {
    if (auto c = key(la[ia]) <=> key(lb[ib]); c != 0) return c;
    long long left_a = std::llabs(la[ia].exponent) - used_a;
    long long left_b = std::llabs(lb[ib].exponent) - used_b;
    long long step = std::min(left_a, left_b);
    used_a += step;
    used_b += step;
    if (used_a == std::llabs(la[ia].exponent)) {
      ++ia;
      used_a = 0;
    }
    if (used_b == std::llabs(lb[ib].exponent)) {
      ++ib;
      used_b = 0;
    }
  }
  return std::strong_ordering::equal;
}

// --- KF(Y) ------------------------------------------------------------------

RingElement RingElement::one(const FreeContext& context) {
  return from_word(GroupWord(context), 1);
}

RingElement RingElement::from_word(const GroupWord& word, Scalar coefficient) {
  RingElement r(word.context());
  r.add_term(word, coefficient);
  return r;
}

Scalar RingElement::coefficient(const GroupWord& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? 0 : it->second;
}

void RingElement::add_term(const GroupWord& word, Scalar c) {
  require_same(context_, word.context());
  const auto& f = context_.field();
  c %= f.p();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(word, c);
  if (!inserted) {
    it->second = f.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

RingElement ring_add(const RingElement& r, const RingElement& s) {
  require_same(r.context(), s.context());
  RingElement out = r;
  for (const auto& [w, c] : s.terms()) out.add_term(w, c);
  return out;
}

RingElement ring_neg(const RingElement& r) {
  RingElement out(r.context());
  for (const auto& [w, c] : r.terms()) out.add_term(w, r.context().field().neg(c));
  return out;
}

RingElement ring_sub(const RingElement& r, const RingElement& s) { return ring_add(r, ring_neg(s)); }

RingElement ring_scale(Scalar lambda, const RingElement& r) {
  const auto& f = r.context().field();
  RingElement out(r.context());
  for (const auto& [w, c] : r.terms()) out.add_term(w, f.mul(lambda % f.p(), c));
  return out;
}

RingElement ring_mul(const RingElement& r, const RingElement& s) {
  require_same(r.context(), s.context());
  const auto& f = r.context().field();
  RingElement out(r.context());
  for (const auto& [u, a] : r.terms()) {
    for (const auto& [v, b] : s.terms()) out.add_term(multiply_words(u, v), f.mul(a, b));
  }
  return out;
}

std::strong_ordering compare(const RingElement& a, const RingElement& b) {
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (auto c = shortlex_compare(ia->first, ib->first); c != 0) return c;
    if (auto c = ia->second <=> ib->second; c != 0) return c;
  }
  return a.terms().size() <=> b.terms().size();
}

// --- XKF(Y) -----------------------------------------------------------------

ModuleElement ModuleElement::generator(const FreeContext& context, std::size_t xvar) {
  return from_part(xvar, RingElement::one(context));
}

ModuleElement ModuleElement::from_part(std::size_t xvar, const RingElement& r) {
  if (xvar >= r.context().xvars().size()) throw InvalidArgument("module variable index out of range");
  ModuleElement u(r.context());
  if (!r.is_zero()) u.parts_.emplace(xvar, r);
  return u;
}

std::size_t ModuleElement::term_count() const noexcept {
  std::size_t n = 0;
  for (const auto& [x, r] : parts_) n += r.terms().size();
  return n;
}

ModuleElement module_add(const ModuleElement& u, const ModuleElement& v) {
  require_same(u.context(), v.context());
  ModuleElement out = u;
  for (const auto& [x, r] : v.parts()) {
    auto it = out.parts_.find(x);
    if (it == out.parts_.end()) {
      out.parts_.emplace(x, r);
    } else {
      it->second = ring_add(it->second, r);
      if (it->second.is_zero()) out.parts_.erase(it);
    }
  }
  return out;
}

ModuleElement module_scale(Scalar lambda, const ModuleElement& u) {
  ModuleElement out(u.context());
  for (const auto& [x, r] : u.parts()) {
    auto scaled = ring_scale(lambda, r);
    if (!scaled.is_zero()) out.parts_.emplace(x, std::move(scaled));
  }
  return out;
}

ModuleElement module_neg(const ModuleElement& u) {
  return module_scale(u.context().field().neg(1), u);
}

ModuleElement module_sub(const ModuleElement& u, const ModuleElement& v) {
  return module_add(u, module_neg(v));
}

ModuleElement module_act(const ModuleElement& u, const RingElement& r) {
  require_same(u.context(), r.context());
  ModuleElement out(u.context());
  for (const auto& [x, part] : u.parts()) {
    auto product = ring_mul(part, r);
    if (!product.is_zero()) out.parts_.emplace(x, std::move(product));
  }
  return out;
}

std::strong_ordering compare(const ModuleElement& a, const ModuleElement& b) {
  auto ia = a.parts().begin();
  auto ib = b.parts().begin();
  for (; ia != a.parts().end() && ib != b.parts().end(); ++ia, ++ib) {
    if (auto c = ia->first <=> ib->first; c != 0) return c;
    if (auto c = compare(ia->second, ib->second); c != 0) return c;
  }
  return a.parts().size() <=> b.parts().size();
}

// --- formulas ---------------------------------------------------------------

const FreeContext& Atom::context() const {
  return is_module() ? module().context() : word().context();
}

QuasiIdentity::QuasiIdentity(std::vector<Atom> premises, Atom conclusion)
    : premises_(std::move(premises)), conclusion_(std::move(conclusion)) {
  for (const auto& p : premises_) require_same(p.context(), conclusion_.context());
}

EquationSystem::EquationSystem(FreeContext context, std::vector<ModuleElement> module_part,
                               std::vector<GroupWord> group_part)
    : context_(std::move(context)),
      module_part_(std::move(module_part)),
      group_part_(std::move(group_part)) {
  for (const auto& u : module_part_) require_same(context_, u.context());
  for (const auto& w : group_part_) require_same(context_, w.context());
  std::sort(module_part_.begin(), module_part_.end(),
            [](const auto& a, const auto& b) { return compare(a, b) < 0; });
  module_part_.erase(std::unique(module_part_.begin(), module_part_.end()), module_part_.end());
  std::sort(group_part_.begin(), group_part_.end(), ShortlexLess{});
  group_part_.erase(std::unique(group_part_.begin(), group_part_.end()), group_part_.end());
}

std::vector<Atom> EquationSystem::atoms() const {
  std::vector<Atom> out;
  for (const auto& u : module_part_) out.push_back(Atom::module_zero(u));
  for (const auto& w : group_part_) out.push_back(Atom::group_one(w));
  return out;
}

EquationSystem EquationSystem::with(const Atom& atom) const {
  auto m = module_part_;
  auto g = group_part_;
  if (atom.is_module()) {
    m.push_back(atom.module());
  } else {
    g.push_back(atom.word());
  }
  return EquationSystem(context_, std::move(m), std::move(g));
}

bool EquationSystem::operator==(const EquationSystem& other) const {
  return context_ == other.context_ && module_part_ == other.module_part_ &&
         group_part_ == other.group_part_;
}

// --- evaluation -------------------------------------------------------------

namespace {

void check_assignment(const Representation& rep, const Assignment& asg, const FreeContext& ctx) {
  if (asg.xmap.size() != ctx.xvars().size() || asg.ymap.size() != ctx.yvars().size()) {
    throw InvalidArgument("assignment does not match the free context");
  }
  if (!(ctx.field() == rep.field())) {
    throw InvalidArgument("terms and representation are over different fields");
  }
}

Element eval_letters(const Representation& rep, const Assignment& asg, const GroupWord& w) {
  const auto& g = rep.group();
  Element out = kIdentity;
  for (const auto& l : w.letters()) out = g.mul(out, g.pow(asg.ymap[l.var], l.exponent));
  return out;
}

}  // namespace

Element eval_word(const Representation& rep, const Assignment& asg, const GroupWord& w) {
  check_assignment(rep, asg, w.context());
  return eval_letters(rep, asg, w);
}

Vector eval_module(const Representation& rep, const Assignment& asg, const ModuleElement& u) {
  check_assignment(rep, asg, u.context());
  const auto& f = rep.field();
  Vector out = Vector::zero(f, rep.dim());
  for (const auto& [x, part] : u.parts()) {
    const Vector& base = asg.xmap[x];
    if (base.size() != rep.dim()) throw InvalidArgument("assigned vector has the wrong dimension");
    for (const auto& [w, c] : part.terms()) {
      out = out + (base * rep.action(eval_letters(rep, asg, w))).scaled(c);
    }
  }
  return out;
}

bool eval_atom(const Representation& rep, const Assignment& asg, const Atom& a) {
  if (a.is_module()) return eval_module(rep, asg, a.module()).is_zero();
  return eval_word(rep, asg, a.word()) == kIdentity;
}

}  // namespace repgeo
