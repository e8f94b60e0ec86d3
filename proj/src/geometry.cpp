#include "repgeo/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "repgeo/errors.hpp"

namespace repgeo {

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n, bool value = false)
      : n_(n), words_((n + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    trim();
  }

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

 private:
  void trim() {
    if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

// Calls f on every k-subset of {0..n-1} in lexicographic order until f
// returns true. Returns whether f stopped the walk.
template <class F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (f(std::span<const std::size_t>(idx))) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// First violating assignment in scan order, non-degenerate ones first.
template <class Violates>
std::optional<Assignment> find_witness(const AssignmentSpace& space, Violates&& violates,
                                       std::uint64_t* checked = nullptr) {
  std::optional<Assignment> degenerate;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    Assignment asg = space.at(i);
    if (checked) ++*checked;
    if (!violates(asg)) continue;
    if (is_nondegenerate(asg)) return asg;
    if (!degenerate) degenerate = std::move(asg);
  }
  return degenerate;
}

std::string vector_name(const Vector& v) { return to_string(v); }

}  // namespace

// --- assignments ------------------------------------------------------------

AssignmentSpace::AssignmentSpace(const Representation& rep, const FreeContext& context,
                                 const Limits& limits)
    : rep_(rep),
      xcount_(context.xvars().size()),
      ycount_(context.yvars().size()),
      space_(rep.space_size()) {
  if (!(context.field() == rep.field())) {
    throw InvalidArgument("terms and representation are over different fields");
  }
  std::uint64_t xs = space_ == 0 ? 0 : checked_pow(space_, xcount_);
  std::uint64_t ys = checked_pow(rep.group().order(), ycount_);
  size_ = checked_mul(xs, ys);
  if (size_ == 0 || size_ > limits.max_assignments) {
    throw SearchSpaceCapExceeded(limits.max_assignments,
                                 "assignment space |V|^|X|*|G|^|Y| exceeds the cap of " +
                                     std::to_string(limits.max_assignments));
  }
}

Assignment AssignmentSpace::at(std::uint64_t index) const {
  Assignment asg;
  const std::uint64_t order = rep_.group().order();
  asg.ymap.resize(ycount_);
  for (std::size_t i = ycount_; i-- > 0;) {
    asg.ymap[i] = static_cast<Element>(index % order);
    index /= order;
  }
  asg.xmap.reserve(xcount_);
  std::vector<std::uint64_t> xs(xcount_);
  for (std::size_t i = xcount_; i-- > 0;) {
    xs[i] = index % space_;
    index /= space_;
  }
  for (auto x : xs) asg.xmap.push_back(vector_from_index(rep_.field(), rep_.dim(), x));
  return asg;
}

bool is_nondegenerate(const Assignment& asg) {
  return std::none_of(asg.xmap.begin(), asg.xmap.end(), [](const Vector& v) { return v.is_zero(); });
}

// --- solutions and closures --------------------------------------------------

SolutionSet solution_set(const Representation& rep, const EquationSystem& system,
                         const Limits& limits) {
  AssignmentSpace space(rep, system.context(), limits);
  const auto atoms = system.atoms();
  SolutionSet out{system, rep, {}};
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    Assignment asg = space.at(i);
    bool ok = std::all_of(atoms.begin(), atoms.end(),
                          [&](const Atom& a) { return eval_atom(rep, asg, a); });
    if (ok) out.solutions.push_back(std::move(asg));
  }
  return out;
}

std::optional<Assignment> closure_counterexample(const Representation& rep,
                                                 const EquationSystem& system, const Atom& atom,
                                                 const Limits& limits) {
  if (!(atom.context() == system.context())) {
    throw ContextMismatch("atom and system belong to different free contexts");
  }
  AssignmentSpace space(rep, system.context(), limits);
  const auto atoms = system.atoms();
  return find_witness(space, [&](const Assignment& asg) {
    for (const auto& a : atoms) {
      if (!eval_atom(rep, asg, a)) return false;
    }
    return !eval_atom(rep, asg, atom);
  });
}

bool in_closure(const Representation& rep, const EquationSystem& system, const Atom& atom,
                const Limits& limits) {
  return !closure_counterexample(rep, system, atom, limits);
}

std::optional<Assignment> at_closure_counterexample(const Representation& rep,
                                                    std::span<const ModuleElement> system,
                                                    const ModuleElement& u, const Limits& limits) {
  EquationSystem sys(u.context(), std::vector<ModuleElement>(system.begin(), system.end()));
  return closure_counterexample(rep, sys, Atom::module_zero(u), limits);
}

bool in_at_closure(const Representation& rep, std::span<const ModuleElement> system,
                   const ModuleElement& u, const Limits& limits) {
  return !at_closure_counterexample(rep, system, u, limits);
}

QidCheck fulfills_qid(const Representation& rep, const QuasiIdentity& qid, const Limits& limits) {
  AssignmentSpace space(rep, qid.context(), limits);
  QidCheck out;
  out.witness = find_witness(
      space,
      [&](const Assignment& asg) {
        for (const auto& p : qid.premises()) {
          if (!eval_atom(rep, asg, p)) return false;
        }
        return !eval_atom(rep, asg, qid.conclusion());
      },
      &out.assignments_checked);
  out.holds = !out.witness;
  return out;
}

QuasiIdentity fixed_point_qid(const PrimeField& field) {
  FreeContext ctx(field, {"x"}, {"y"});
  auto x = ModuleElement::generator(ctx, 0);
  auto y = RingElement::from_word(GroupWord::generator(ctx, 0));
  return QuasiIdentity({Atom::module_zero(x * y - x)}, Atom::group_one(GroupWord::generator(ctx, 0)));
}

// --- point separation -------------------------------------------------------

namespace {

struct PairTracker {
  explicit PairTracker(std::size_t n) : n(n), open(n * n, false) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) open[i * n + j] = true;
    }
    remaining = n * (n - 1) / 2;
  }

  std::size_t gain(const std::vector<Element>& image) const {
    std::size_t g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (open[i * n + j] && image[i] != image[j]) ++g;
      }
    }
    return g;
  }

  void apply(const std::vector<Element>& image) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (open[i * n + j] && image[i] != image[j]) {
          open[i * n + j] = false;
          --remaining;
        }
      }
    }
  }

  std::optional<std::pair<std::size_t, std::size_t>> first_open() const {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (open[i * n + j]) return std::pair{i, j};
      }
    }
    return std::nullopt;
  }

  std::size_t n;
  std::vector<bool> open;
  std::size_t remaining;
};

// Basis of K ∩ {v : v·A = 0} for K spanned by `basis`.
std::vector<Vector> intersect_kernel(const std::vector<Vector>& basis, const Matrix& a,
                                     const PrimeField& field, std::size_t dim) {
  if (basis.empty()) return {};
  Matrix b = stack_rows(field, dim, basis);
  std::vector<Vector> out;
  for (const auto& c : (b * a).left_kernel()) out.push_back(c * b);
  return out;
}

Vector least_nonzero(const std::vector<Vector>& basis, const PrimeField& field, std::size_t dim) {
  std::optional<Vector> best;
  const std::uint64_t count = checked_pow(field.p(), basis.size());
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    std::uint64_t rest = idx;
    Vector v = Vector::zero(field, dim);
    for (const auto& b : basis) {
      v = v + b.scaled(static_cast<Scalar>(rest % field.p()));
      rest /= field.p();
    }
    if (!v.is_zero() && (!best || vector_index(v) < vector_index(*best))) best = v;
  }
  return *best;
}

std::string pair_note(std::size_t k, std::size_t group_pairs, std::size_t kernel_before,
                      std::size_t kernel_after, bool with_vectors) {
  std::string note = "hom " + std::to_string(k) + ": separates " + std::to_string(group_pairs) +
                     " new group pair(s)";
  if (with_vectors) {
    note += ", common kernel dim " + std::to_string(kernel_before) + " -> " +
            std::to_string(kernel_after);
  }
  return note;
}

}  // namespace

Separation<GroupSeparation> separates_points(const FiniteGroup& source, const FiniteGroup& target,
                                             const Limits& limits) {
  const auto homs = enumerate_group_homs(source, target, limits);
  PairTracker pairs(source.order());
  GroupSeparation cert{source, target, {}, {}};
  while (pairs.remaining > 0) {
    std::size_t best = homs.size();
    std::size_t best_gain = 0;
    for (std::size_t h = 0; h < homs.size(); ++h) {
      auto g = pairs.gain(homs[h].image);
      if (g > best_gain) {
        best_gain = g;
        best = h;
      }
    }
    if (best == homs.size()) break;
    pairs.apply(homs[best].image);
    cert.notes.push_back(pair_note(cert.homs.size(), best_gain, 0, 0, false));
    cert.homs.push_back(homs[best]);
  }
  Separation<GroupSeparation> out;
  if (auto open = pairs.first_open()) {
    out.inseparable = InseparablePair{InseparablePair::Sort::group, source.name(open->first),
                                      source.name(open->second)};
  } else {
    out.certificate = std::move(cert);
  }
  return out;
}

namespace {

std::pair<std::size_t, std::size_t> matrix_shape(const Matrix& m) {
  std::size_t off = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) off += m.at(r, c) != (r == c ? 1u : 0u);
  }
  return {m.rank(), off};
}

bool shape_better(std::pair<std::size_t, std::size_t> a, std::pair<std::size_t, std::size_t> b) {
  return a.first > b.first || (a.first == b.first && a.second < b.second);
}

}  // namespace

Separation<RepSeparation> separates_points(const Representation& source,
                                           const Representation& target, const Limits& limits) {
  const auto homs = enumerate_rep_homs(source, target, limits);
  const auto& field = source.field();
  const std::size_t dim = source.dim();
  const long double space = static_cast<long double>(source.space_size());

  PairTracker pairs(source.group().order());
  std::vector<Vector> kernel;
  for (std::size_t i = 0; i < dim; ++i) kernel.push_back(Vector::unit(field, dim, i));

  auto kernel_size = [&](std::size_t k) {
    long double s = 1;
    for (std::size_t i = 0; i < k; ++i) s *= field.p();
    return s;
  };

  RepSeparation cert{source, target, {}, {}};
  while (pairs.remaining > 0 || !kernel.empty()) {
    std::size_t best = homs.size();
    long double best_gain = 0;
    std::size_t best_group_gain = 0;
    std::pair<std::size_t, std::size_t> best_shape{0, 0};
    std::vector<Vector> best_kernel;
    for (std::size_t h = 0; h < homs.size(); ++h) {
      auto group_gain = pairs.gain(homs[h].grouphom.image);
      auto next = intersect_kernel(kernel, homs[h].matrix, field, dim);
      // Unordered vector pairs (v, w) with v - w in the kernel.
      long double vector_gain = space * (kernel_size(kernel.size()) - kernel_size(next.size())) / 2;
      long double gain = vector_gain + static_cast<long double>(group_gain);
      if (gain <= 0) continue;
      // Ties: higher rank, then fewer entries off the identity pattern.
      auto shape = matrix_shape(homs[h].matrix);
      if (gain > best_gain || (gain == best_gain && shape_better(shape, best_shape))) {
        best_gain = gain;
        best = h;
        best_shape = shape;
        best_group_gain = group_gain;
        best_kernel = std::move(next);
      }
    }
    if (best == homs.size()) break;
    pairs.apply(homs[best].grouphom.image);
    cert.notes.push_back(
        pair_note(cert.homs.size(), best_group_gain, kernel.size(), best_kernel.size(), true));
    kernel = std::move(best_kernel);
    cert.homs.push_back(homs[best]);
  }

  Separation<RepSeparation> out;
  if (auto open = pairs.first_open()) {
    out.inseparable = InseparablePair{InseparablePair::Sort::group,
                                      source.group().name(open->first),
                                      source.group().name(open->second)};
  } else if (!kernel.empty()) {
    out.inseparable = InseparablePair{InseparablePair::Sort::vector,
                                      vector_name(least_nonzero(kernel, field, dim)),
                                      vector_name(Vector::zero(field, dim))};
  } else {
    out.certificate = std::move(cert);
  }
  return out;
}

bool verify_separation(const GroupSeparation& cert) {
  std::set<std::vector<Element>> images;
  for (const auto& h : cert.homs) {
    if (!(h.domain == cert.source) || !(h.codomain == cert.target)) return false;
    if (!is_group_hom(cert.source, cert.target, h.image)) return false;
  }
  for (Element g = 0; g < cert.source.order(); ++g) {
    std::vector<Element> tuple;
    for (const auto& h : cert.homs) tuple.push_back(h.image[g]);
    if (!images.insert(std::move(tuple)).second) return false;
  }
  return true;
}

bool verify_separation(const RepSeparation& cert, const Limits& limits) {
  const auto& src = cert.source;
  const auto& tgt = cert.target;
  const std::uint64_t space = src.space_size();
  if (space == 0 || space > limits.max_assignments) {
    throw SearchSpaceCapExceeded(limits.max_assignments, "vector space too large to verify");
  }
  for (const auto& h : cert.homs) {
    if (!(h.source == src) || !(h.target == tgt)) return false;
    if (!is_group_hom(src.group(), tgt.group(), h.grouphom.image)) return false;
    if (h.matrix.rows() != src.dim() || h.matrix.cols() != tgt.dim()) return false;
  }
  // α(v ∘ g) = α(v) ∘ β(g) pointwise, and injectivity of v ↦ (α_i(v))_i.
  std::set<std::vector<Scalar>> vector_images;
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    Vector v = vector_from_index(src.field(), src.dim(), idx);
    std::vector<Scalar> tuple;
    for (const auto& h : cert.homs) {
      Vector image = v * h.matrix;
      for (Element g = 0; g < src.group().order(); ++g) {
        if (!(act(src, v, g) * h.matrix == act(tgt, image, h.grouphom.image[g]))) return false;
      }
      tuple.insert(tuple.end(), image.coords().begin(), image.coords().end());
    }
    if (!vector_images.insert(std::move(tuple)).second) return false;
  }
  std::set<std::vector<Element>> group_images;
  for (Element g = 0; g < src.group().order(); ++g) {
    std::vector<Element> tuple;
    for (const auto& h : cert.homs) tuple.push_back(h.grouphom.image[g]);
    if (!group_images.insert(std::move(tuple)).second) return false;
  }
  return true;
}

// --- search space -----------------------------------------------------------

FreeContext search_context(const PrimeField& field, std::size_t xvars, std::size_t yvars) {
  auto names = [](const std::string& stem, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(n == 1 ? stem : stem + std::to_string(i + 1));
    return out;
  };
  return FreeContext(field, names("x", xvars), names("y", yvars));
}

std::vector<GroupWord> enumerate_words(const FreeContext& context, std::size_t max_length) {
  // Unit-letter sequences in shortlex order; appending letters in key order
  // to prefixes taken in order keeps each length class sorted.
  std::vector<std::vector<Letter>> level{{}};
  std::vector<GroupWord> out{GroupWord(context)};
  const std::size_t vars = context.yvars().size();
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& prefix : level) {
      for (std::size_t v = 0; v < vars; ++v) {
        for (long long e : {1LL, -1LL}) {
          if (!prefix.empty() && prefix.back().var == v && prefix.back().exponent == -e) continue;
          auto word = prefix;
          word.push_back({v, e});
          out.push_back(reduce_word(context, word));
          next.push_back(std::move(word));
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<ModuleElement> enumerate_module_candidates(const FreeContext& context,
                                                       const SearchBounds& bounds) {
  const auto words = enumerate_words(context, bounds.max_word_length);
  struct Term {
    std::size_t x;
    const GroupWord* w;
  };
  std::vector<Term> terms;
  for (std::size_t x = 0; x < context.xvars().size(); ++x) {
    for (const auto& w : words) terms.push_back({x, &w});
  }
  const std::uint32_t p = context.field().p();
  std::vector<ModuleElement> out;
  for (std::size_t k = 1; k <= bounds.max_terms; ++k) {
    for_each_combination(terms.size(), k, [&](std::span<const std::size_t> pick) {
      std::vector<Scalar> coeffs(k, 1);
      while (true) {
        ModuleElement u(context);
        for (std::size_t i = 0; i < k; ++i) {
          const auto& t = terms[pick[i]];
          u = u + ModuleElement::from_part(t.x, RingElement::from_word(*t.w, coeffs[i]));
        }
        out.push_back(std::move(u));
        std::size_t i = k;
        while (i > 0 && coeffs[i - 1] == p - 1) coeffs[--i] = 1;
        if (i == 0) break;
        ++coeffs[i - 1];
      }
      return false;
    });
  }
  return out;
}

// --- deciders ---------------------------------------------------------------

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::equivalent:
      return "equivalent";
    case Outcome::not_equivalent:
      return "not-equivalent";
    case Outcome::unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

void require_same_field(const Representation& a, const Representation& b) {
  if (!(a.field() == b.field())) throw InvalidArgument("representations are over different fields");
}

// Truth set of every atom over an assignment space.
std::vector<Bits> truth_sets(const Representation& rep, const AssignmentSpace& space,
                             const std::vector<Atom>& atoms) {
  std::vector<Bits> out(atoms.size(), Bits(space.size()));
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    Assignment asg = space.at(i);
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      if (eval_atom(rep, asg, atoms[a])) out[a].set(i);
    }
  }
  return out;
}

std::optional<QuasiIdentity> scan_qids(const Representation& r, const Representation& s,
                                       const FreeContext& ctx, const std::vector<Atom>& atoms,
                                       std::size_t max_premises, const Limits& limits) {
  AssignmentSpace space_r(r, ctx, limits);
  AssignmentSpace space_s(s, ctx, limits);
  const auto truth_r = truth_sets(r, space_r, atoms);
  const auto truth_s = truth_sets(s, space_s, atoms);

  std::optional<QuasiIdentity> found;
  for (std::size_t k = 0; k <= max_premises && !found; ++k) {
    for_each_combination(atoms.size(), k, [&](std::span<const std::size_t> pick) {
      Bits sol_r(space_r.size(), true);
      Bits sol_s(space_s.size(), true);
      for (auto i : pick) {
        sol_r &= truth_r[i];
        sol_s &= truth_s[i];
      }
      for (std::size_t c = 0; c < atoms.size(); ++c) {
        if (std::find(pick.begin(), pick.end(), c) != pick.end()) continue;
        if (sol_r.subset_of(truth_r[c]) == sol_s.subset_of(truth_s[c])) continue;
        std::vector<Atom> premises;
        for (auto i : pick) premises.push_back(atoms[i]);
        QuasiIdentity q(std::move(premises), atoms[c]);
        if (fulfills_qid(r, q, limits).holds == fulfills_qid(s, q, limits).holds) {
          throw std::logic_error("separating quasi-identity failed re-verification");
        }
        found = std::move(q);
        return true;
      }
      return false;
    });
  }
  return found;
}

bool covers_fixed_point_qid(const SearchBounds& b) {
  return b.max_xvars >= 1 && b.max_yvars >= 1 && b.max_terms >= 2 && b.max_word_length >= 1 &&
         b.max_premises >= 1;
}

}  // namespace

std::optional<QuasiIdentity> find_separating_qid(const Representation& r, const Representation& s,
                                                 const SearchBounds& bounds, const Limits& limits) {
  require_same_field(r, s);
  if (r == s) return std::nullopt;
  auto ctx = search_context(r.field(), bounds.max_xvars, bounds.max_yvars);
  std::vector<Atom> atoms;
  for (auto& u : enumerate_module_candidates(ctx, bounds)) atoms.push_back(Atom::module_zero(std::move(u)));
  for (auto& w : enumerate_words(ctx, bounds.max_word_length)) {
    if (!w.is_identity()) atoms.push_back(Atom::group_one(std::move(w)));
  }
  if (auto q = scan_qids(r, s, ctx, atoms, bounds.max_premises, limits)) return q;
  if (!covers_fixed_point_qid(bounds)) {
    auto q = fixed_point_qid(r.field());
    if (fulfills_qid(r, q, limits).holds != fulfills_qid(s, q, limits).holds) return q;
  }
  return std::nullopt;
}

std::optional<QuasiIdentity> find_separating_qid(const FiniteGroup& g, const FiniteGroup& h,
                                                 const SearchBounds& bounds, const Limits& limits) {
  if (g == h) return std::nullopt;
  PrimeField f2(2);
  auto r = trivial_representation(f2, 1, g);
  auto s = trivial_representation(f2, 1, h);
  auto ctx = search_context(f2, 0, bounds.max_yvars);
  std::vector<Atom> atoms;
  for (auto& w : enumerate_words(ctx, bounds.max_word_length)) {
    if (!w.is_identity()) atoms.push_back(Atom::group_one(std::move(w)));
  }
  return scan_qids(r, s, ctx, atoms, bounds.max_premises, limits);
}

Verdict geo_equivalent(const FiniteGroup& a, const FiniteGroup& b, const SearchBounds& bounds,
                       const Limits& limits) {
  Verdict v;
  v.bounds = bounds;
  auto forward = separates_points(a, b, limits);
  if (!forward.certificate) {
    v.outcome = Outcome::not_equivalent;
    v.inseparable = forward.inseparable;
    v.inseparable_side = 0;
    v.separating_qid = find_separating_qid(a, b, bounds, limits);
    return v;
  }
  auto backward = separates_points(b, a, limits);
  if (!backward.certificate) {
    v.outcome = Outcome::not_equivalent;
    v.inseparable = backward.inseparable;
    v.inseparable_side = 1;
    v.separating_qid = find_separating_qid(a, b, bounds, limits);
    return v;
  }
  v.outcome = Outcome::equivalent;
  v.group_forward = std::move(forward.certificate);
  v.group_backward = std::move(backward.certificate);
  return v;
}

Verdict geo_equivalent(const Representation& a, const Representation& b,
                       const SearchBounds& bounds, const Limits& limits) {
  require_same_field(a, b);
  Verdict v;
  v.bounds = bounds;
  auto forward = separates_points(a, b, limits);
  if (!forward.certificate) {
    v.outcome = Outcome::not_equivalent;
    v.inseparable = forward.inseparable;
    v.inseparable_side = 0;
    v.separating_qid = find_separating_qid(a, b, bounds, limits);
    return v;
  }
  auto backward = separates_points(b, a, limits);
  if (!backward.certificate) {
    v.outcome = Outcome::not_equivalent;
    v.inseparable = backward.inseparable;
    v.inseparable_side = 1;
    v.separating_qid = find_separating_qid(a, b, bounds, limits);
    return v;
  }
  v.outcome = Outcome::equivalent;
  v.forward = std::move(forward.certificate);
  v.backward = std::move(backward.certificate);
  return v;
}

std::optional<AtWitness> find_at_witness(const Representation& r, const Representation& s,
                                         const SearchBounds& bounds, const Limits& limits) {
  require_same_field(r, s);
  if (r == s) return std::nullopt;
  auto ctx = search_context(r.field(), bounds.max_xvars, bounds.max_yvars);
  const auto candidates = enumerate_module_candidates(ctx, bounds);
  std::vector<Atom> atoms;
  for (const auto& u : candidates) atoms.push_back(Atom::module_zero(u));

  AssignmentSpace space_r(r, ctx, limits);
  AssignmentSpace space_s(s, ctx, limits);
  const auto zero_r = truth_sets(r, space_r, atoms);
  const auto zero_s = truth_sets(s, space_s, atoms);

  std::optional<AtWitness> found;
  for (std::size_t k = 0; k <= bounds.max_system_size && !found; ++k) {
    for_each_combination(candidates.size(), k, [&](std::span<const std::size_t> pick) {
      Bits sol_r(space_r.size(), true);
      Bits sol_s(space_s.size(), true);
      for (auto i : pick) {
        sol_r &= zero_r[i];
        sol_s &= zero_s[i];
      }
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        bool in_r = sol_r.subset_of(zero_r[c]);
        bool in_s = sol_s.subset_of(zero_s[c]);
        if (in_r == in_s) continue;
        AtWitness w{{}, candidates[c], in_r, in_s};
        for (auto i : pick) w.system.push_back(candidates[i]);
        if (!verify_at_witness(r, s, w, limits)) {
          throw std::logic_error("action-type witness failed re-verification");
        }
        found = std::move(w);
        return true;
      }
      return false;
    });
  }
  return found;
}

bool verify_at_witness(const Representation& r, const Representation& s, const AtWitness& w,
                       const Limits& limits) {
  bool in_r = in_at_closure(r, w.system, w.candidate, limits);
  bool in_s = in_at_closure(s, w.system, w.candidate, limits);
  return in_r != in_s && in_r == w.in_first && in_s == w.in_second;
}

Verdict at_equivalent(const Representation& r, const Representation& s,
                      const SearchBounds& bounds, const Limits& limits) {
  require_same_field(r, s);
  Verdict v;
  v.bounds = bounds;
  auto image_r = faithful_image(r);
  auto image_s = faithful_image(s);
  auto forward = separates_points(image_r.quotient, image_s.quotient, limits);
  if (forward.certificate) {
    auto backward = separates_points(image_s.quotient, image_r.quotient, limits);
    if (backward.certificate) {
      v.outcome = Outcome::equivalent;
      v.first_image = std::move(image_r);
      v.second_image = std::move(image_s);
      v.forward = std::move(forward.certificate);
      v.backward = std::move(backward.certificate);
      return v;
    }
  }
  if (auto w = find_at_witness(r, s, bounds, limits)) {
    v.outcome = Outcome::not_equivalent;
    v.at_witness = std::move(w);
    return v;
  }
  v.outcome = Outcome::unknown;
  return v;
}

}  // namespace repgeo
