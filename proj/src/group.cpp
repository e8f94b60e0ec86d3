#include "repgeo/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "repgeo/errors.hpp"

namespace repgeo {

namespace {

constexpr Element kUnset = static_cast<Element>(-1);

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::string> names,
                                    const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = names.size();
  if (n == 0) throw InvalidArgument("group needs at least one element");
  {
    std::set<std::string> seen;
    for (const auto& name : names) {
      if (name.empty()) throw InvalidArgument("empty element name");
      if (!seen.insert(name).second) throw InvalidArgument("duplicate element name '" + name + "'");
    }
  }
  if (table.size() != n) throw InvalidArgument("Cayley table must have one row per element");
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidArgument("Cayley table must be square");
    for (auto e : row) {
      if (e >= n) throw InvalidArgument("Cayley table entry out of range");
    }
  }

  using Reason = NotAGroup::Reason;
  for (std::size_t j = 0; j < n; ++j) {
    if (table[0][j] != j || table[j][0] != j) {
      throw NotAGroup(Reason::identity, {j, j, j},
                      "element 0 ('" + names[0] + "') is not an identity for '" + names[j] + "'");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> row_seen(n, kUnset);
    std::vector<std::size_t> col_seen(n, kUnset);
    for (std::size_t j = 0; j < n; ++j) {
      if (row_seen[table[i][j]] != kUnset) {
        throw NotAGroup(Reason::latin_square, {i, row_seen[table[i][j]], j},
                        "row '" + names[i] + "' repeats entry '" + names[table[i][j]] + "'");
      }
      row_seen[table[i][j]] = j;
      if (col_seen[table[j][i]] != kUnset) {
        throw NotAGroup(Reason::latin_square, {col_seen[table[j][i]], j, i},
                        "column '" + names[i] + "' repeats entry '" + names[table[j][i]] + "'");
      }
      col_seen[table[j][i]] = j;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (table[table[i][j]][k] != table[i][table[j][k]]) {
          throw NotAGroup(Reason::associativity, {i, j, k},
                          "(" + names[i] + "*" + names[j] + ")*" + names[k] + " != " + names[i] +
                              "*(" + names[j] + "*" + names[k] + ")");
        }
      }
    }
  }

  auto data = std::make_shared<Data>();
  data->table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) data->table[i * n + j] = table[i][j];
  }
  data->inverses.assign(n, kUnset);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] == 0 && table[j][i] == 0) {
        data->inverses[i] = j;
        break;
      }
    }
    if (data->inverses[i] == kUnset) {
      throw NotAGroup(Reason::inverse, {i, i, i}, "'" + names[i] + "' has no two-sided inverse");
    }
  }
  data->orders.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    Element x = i;
    while (x != 0) {
      x = table[x][i];
      ++data->orders[i];
    }
  }
  data->names = std::move(names);
  return FiniteGroup(std::move(data));
}

Element FiniteGroup::pow(Element g, long long e) const {
  const auto ord = static_cast<long long>(element_order(g));
  long long r = e % ord;
  if (r < 0) r += ord;
  Element x = kIdentity;
  for (long long i = 0; i < r; ++i) x = mul(x, g);
  return x;
}

std::optional<Element> FiniteGroup::find(std::string_view name) const {
  for (std::size_t i = 0; i < order(); ++i) {
    if (data_->names[i] == name) return i;
  }
  return std::nullopt;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order(); ++a) {
    for (Element b = a + 1; b < order(); ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

bool FiniteGroup::operator==(const FiniteGroup& other) const {
  if (data_ == other.data_) return true;
  return data_->names == other.data_->names && data_->table == other.data_->table;
}

FiniteGroup group_from_table(std::vector<std::string> names,
                             const std::vector<std::vector<std::size_t>>& table) {
  return FiniteGroup::from_table(std::move(names), table);
}

FiniteGroup cyclic_group(std::size_t n, const std::string& generator) {
  if (n == 0) throw InvalidArgument("cyclic group order must be positive");
  std::vector<std::string> names{"1"};
  for (std::size_t k = 1; k < n; ++k) {
    names.push_back(k == 1 ? generator : generator + "^" + std::to_string(k));
  }
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return FiniteGroup::from_table(std::move(names), table);
}

FiniteGroup product_group(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = h.order();
  const std::size_t n = g.order() * m;

  // Pair (a, b) sits at index a + |G|*b.
  const std::size_t k = g.order();
  std::vector<std::string> names;
  for (Element b = 0; b < m; ++b) {
    for (Element a = 0; a < k; ++a) {
      if (a == 0 && b == 0) {
        names.push_back("1");
      } else if (a == 0) {
        names.push_back(h.name(b));
      } else if (b == 0) {
        names.push_back(g.name(a));
      } else {
        names.push_back(g.name(a) + h.name(b));
      }
    }
  }
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) {
    for (Element b = 0; b < m; ++b) {
      for (Element a = 0; a < k; ++a) {
        if (a != 0 || b != 0) names[a + k * b] = g.name(a) + "." + h.name(b);
      }
    }
  }

  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i][j] = g.mul(i % k, j % k) + k * h.mul(i / k, j / k);
    }
  }
  return FiniteGroup::from_table(std::move(names), table);
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<Element> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_.front() != kIdentity) {
    throw InvalidArgument("subgroup must contain the identity");
  }
  if (members_.back() >= parent_.order()) throw InvalidArgument("subgroup member out of range");
  for (auto a : members_) {
    if (!contains(parent_.inv(a))) throw InvalidArgument("subgroup not closed under inverses");
    for (auto b : members_) {
      if (!contains(parent_.mul(a, b))) throw InvalidArgument("subgroup not closed under products");
    }
  }
}

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  std::vector<Element> all(parent.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return Subgroup(parent, std::move(all));
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) { return Subgroup(parent, {kIdentity}); }

bool Subgroup::contains(Element g) const {
  return std::binary_search(members_.begin(), members_.end(), g);
}

std::optional<std::pair<Element, Element>> Subgroup::normality_witness() const {
  for (Element g = 0; g < parent_.order(); ++g) {
    for (auto n : members_) {
      if (!contains(parent_.mul(parent_.mul(parent_.inv(g), n), g))) return std::pair{g, n};
    }
  }
  return std::nullopt;
}

Quotient quotient_group(const FiniteGroup& g, const Subgroup& n) {
  if (!(n.parent() == g)) throw InvalidArgument("subgroup belongs to a different group");
  if (auto w = n.normality_witness()) {
    throw NotNormal(w->first, w->second,
                    "subgroup is not normal: conjugating '" + g.name(w->second) + "' by '" +
                        g.name(w->first) + "' leaves it");
  }
  std::vector<Element> sigma(g.order(), kUnset);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (sigma[x] != kUnset) continue;
    for (auto m : n.members()) sigma[g.mul(x, m)] = reps.size();
    reps.push_back(x);
  }
  std::vector<std::string> names;
  for (auto r : reps) names.push_back(g.name(r));
  std::vector<std::vector<std::size_t>> table(reps.size(), std::vector<std::size_t>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) table[i][j] = sigma[g.mul(reps[i], reps[j])];
  }
  return {FiniteGroup::from_table(std::move(names), table), std::move(sigma)};
}

bool GroupHom::is_injective() const {
  std::vector<bool> hit(codomain.order(), false);
  for (auto e : image) {
    if (hit[e]) return false;
    hit[e] = true;
  }
  return true;
}

bool GroupHom::is_bijective() const { return domain.order() == codomain.order() && is_injective(); }

Subgroup GroupHom::kernel() const {
  std::vector<Element> k;
  for (Element g = 0; g < domain.order(); ++g) {
    if (image[g] == kIdentity) k.push_back(g);
  }
  return Subgroup(domain, std::move(k));
}

bool is_group_hom(const FiniteGroup& domain, const FiniteGroup& codomain,
                  std::span<const Element> image) {
  if (image.size() != domain.order()) return false;
  for (auto e : image) {
    if (e >= codomain.order()) return false;
  }
  for (Element a = 0; a < domain.order(); ++a) {
    for (Element b = 0; b < domain.order(); ++b) {
      if (image[domain.mul(a, b)] != codomain.mul(image[a], image[b])) return false;
    }
  }
  return true;
}

GroupHom compose(const GroupHom& first, const GroupHom& second) {
  if (!(first.codomain == second.domain)) throw InvalidArgument("homomorphisms do not compose");
  std::vector<Element> image(first.domain.order());
  for (Element g = 0; g < image.size(); ++g) image[g] = second.image[first.image[g]];
  return {first.domain, second.codomain, std::move(image)};
}

GeneratingSet greedy_generators(const FiniteGroup& g) {
  GeneratingSet out;
  std::vector<bool> reached(g.order(), false);
  reached[kIdentity] = true;
  out.words.assign(g.order(), {});

  auto close = [&] {
    // Breadth-first from the identity so every stored word is shortest.
    std::vector<bool> seen(g.order(), false);
    std::deque<Element> queue{kIdentity};
    seen[kIdentity] = true;
    out.words[kIdentity].clear();
    while (!queue.empty()) {
      Element e = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < out.generators.size(); ++k) {
        Element t = g.mul(e, out.generators[k]);
        if (seen[t]) continue;
        seen[t] = true;
        out.words[t] = out.words[e];
        out.words[t].push_back(k);
        queue.push_back(t);
      }
    }
    reached = seen;
  };

  for (Element x = 1; x < g.order(); ++x) {
    if (reached[x]) continue;
    out.generators.push_back(x);
    close();
  }
  return out;
}

namespace {

// Extends a partial hom defined on <gens[0..k)> by gens[k] -> target. The
// result is closed under right multiplication by gens[0..k] and consistent,
// hence a hom on <gens[0..k]>.
bool extend_partial(const FiniteGroup& g, const FiniteGroup& h, std::span<const Element> gens,
                    std::size_t k, Element target, std::vector<Element>& img) {
  img[gens[k]] = target;
  std::deque<Element> queue;
  for (Element e = 0; e < g.order(); ++e) {
    if (img[e] != kUnset) queue.push_back(e);
  }
  while (!queue.empty()) {
    Element e = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j <= k; ++j) {
      Element t = g.mul(e, gens[j]);
      Element value = h.mul(img[e], img[gens[j]]);
      if (img[t] == kUnset) {
        img[t] = value;
        queue.push_back(t);
      } else if (img[t] != value) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<GroupHom> enumerate_group_homs(const FiniteGroup& g, const FiniteGroup& h,
                                           const Limits& limits) {
  if (g.order() > limits.max_group_order || h.order() > limits.max_group_order) {
    throw EnumerationCapExceeded(limits.max_group_order,
                                 "group order exceeds the configured cap of " +
                                     std::to_string(limits.max_group_order));
  }
  const auto gens = greedy_generators(g).generators;
  std::vector<std::vector<Element>> found;

  std::vector<Element> start(g.order(), kUnset);
  start[kIdentity] = kIdentity;

  auto search = [&](auto&& self, std::size_t k, const std::vector<Element>& img) -> void {
    if (k == gens.size()) {
      if (is_group_hom(g, h, img)) found.push_back(img);
      return;
    }
    const std::size_t gen_order = g.element_order(gens[k]);
    for (Element target = 0; target < h.order(); ++target) {
      if (gen_order % h.element_order(target) != 0) continue;
      auto next = img;
      if (extend_partial(g, h, gens, k, target, next)) self(self, k + 1, next);
    }
  };
  search(search, 0, start);

  std::sort(found.begin(), found.end());
  std::vector<GroupHom> homs;
  homs.reserve(found.size());
  for (auto& img : found) homs.push_back({g, h, std::move(img)});
  return homs;
}

}  // namespace repgeo
