#include "repgeo/representation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "repgeo/errors.hpp"

namespace repgeo {

Representation Representation::make(PrimeField field, std::size_t dim, FiniteGroup group,
                                     const std::map<Element, Matrix>& act) {
  if (dim == 0) throw DimensionMismatch("representation dimension must be at least 1");
  const std::size_t n = group.order();
  std::vector<std::optional<Matrix>> given(n);
  for (const auto& [g, m] : act) {
    if (g >= n) throw InvalidArgument("action given for unknown element index " + std::to_string(g));
    if (m.rows() != dim || m.cols() != dim) {
      throw DimensionMismatch("action of '" + group.name(g) + "' is " + std::to_string(m.rows()) +
                              "x" + std::to_string(m.cols()) + ", expected " + std::to_string(dim) +
                              "x" + std::to_string(dim));
    }
    if (!(m.field() == field)) {
      throw DimensionMismatch("action of '" + group.name(g) + "' is over a different field");
    }
    given[g] = m;
  }
  if (given[kIdentity] && !given[kIdentity]->is_identity()) {
    throw NotAnAction(kIdentity, kIdentity, "the identity must act as the identity matrix");
  }

  auto data = std::make_shared<Data>(Data{field, dim, group, {}});
  data->act.reserve(n);
  data->act.push_back(Matrix::identity(field, dim));
  for (Element g = 1; g < n; ++g) {
    if (!given[g]) {
      throw InvalidArgument("no action given for element '" + group.name(g) + "'");
    }
    data->act.push_back(*given[g]);
  }

  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      if (!(data->act[g] * data->act[h] == data->act[group.mul(g, h)])) {
        throw NotAnAction(g, h,
                          "act(" + group.name(g) + ")*act(" + group.name(h) + ") != act(" +
                              group.name(group.mul(g, h)) + ")");
      }
    }
  }
  return Representation(std::move(data));
}

bool Representation::operator==(const Representation& other) const {
  if (data_ == other.data_) return true;
  return data_->field == other.data_->field && data_->dim == other.data_->dim &&
         data_->group == other.data_->group && data_->act == other.data_->act;
}

Representation make_representation(PrimeField field, std::size_t dim, FiniteGroup group,
                                   const std::map<Element, Matrix>& act) {
  return Representation::make(field, dim, std::move(group), act);
}

Representation trivial_representation(PrimeField field, std::size_t dim, FiniteGroup group) {
  std::map<Element, Matrix> act;
  for (Element g = 1; g < group.order(); ++g) act.emplace(g, Matrix::identity(field, dim));
  return Representation::make(field, dim, std::move(group), act);
}

Vector act(const Representation& rep, const Vector& v, Element g) {
  if (g >= rep.group().order()) throw InvalidArgument("element index out of range");
  if (v.size() != rep.dim() || !(v.field() == rep.field())) {
    throw InvalidArgument("vector does not belong to the representation space");
  }
  return v * rep.action(g);
}

Subgroup stabilizer(const Representation& rep, const Vector& v) {
  std::vector<Element> members;
  for (Element g = 0; g < rep.group().order(); ++g) {
    if (act(rep, v, g) == v) members.push_back(g);
  }
  return Subgroup(rep.group(), std::move(members));
}

Subgroup rep_kernel(const Representation& rep) {
  std::vector<Element> members;
  for (Element g = 0; g < rep.group().order(); ++g) {
    if (rep.action(g).is_identity()) members.push_back(g);
  }
  return Subgroup(rep.group(), std::move(members));
}

FaithfulImage faithful_image(const Representation& rep) {
  auto [quotient, sigma] = quotient_group(rep.group(), rep_kernel(rep));
  std::vector<std::optional<Matrix>> acts(quotient.order());
  for (Element g = 0; g < rep.group().order(); ++g) {
    auto& slot = acts[sigma[g]];
    if (!slot) {
      slot = rep.action(g);
    } else if (!(*slot == rep.action(g))) {
      throw std::logic_error("faithful_image: coset members act differently");
    }
  }
  std::map<Element, Matrix> act_map;
  for (Element c = 1; c < quotient.order(); ++c) act_map.emplace(c, *acts[c]);
  auto image = Representation::make(rep.field(), rep.dim(), quotient, act_map);
  return {rep, std::move(image), std::move(sigma)};
}

bool is_rep_hom(const Representation& source, const Representation& target, const Matrix& a,
                std::span<const Element> beta) {
  if (!(source.field() == target.field())) return false;
  if (a.rows() != source.dim() || a.cols() != target.dim()) return false;
  if (!is_group_hom(source.group(), target.group(), beta)) return false;
  for (Element g = 0; g < source.group().order(); ++g) {
    if (!(source.action(g) * a == a * target.action(beta[g]))) return false;
  }
  return true;
}

RepHom compose(const RepHom& first, const RepHom& second) {
  if (!(first.target == second.source)) throw InvalidArgument("representation homs do not compose");
  return {first.source, second.target, first.matrix * second.matrix,
          compose(first.grouphom, second.grouphom)};
}

namespace {

// Every A with act_r(g) A = A act_s(β(g)) for the generators g of r's group.
std::vector<Matrix> equivariant_matrices(const Representation& r, const Representation& s,
                                         const std::vector<Element>& beta,
                                         const std::vector<Element>& generators,
                                         const Limits& limits) {
  const auto& f = r.field();
  const std::size_t m = r.dim();
  const std::size_t n = s.dim();
  const std::size_t unknowns = m * n;

  Matrix system(f, generators.size() * unknowns, unknowns);
  std::size_t row = 0;
  for (auto g : generators) {
    const Matrix& left = r.action(g);
    const Matrix& right = s.action(beta[g]);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j, ++row) {
        for (std::size_t k = 0; k < m; ++k) {
          auto col = k * n + j;
          system.set(row, col, f.add(system.at(row, col), left.at(i, k)));
        }
        for (std::size_t k = 0; k < n; ++k) {
          auto col = i * n + k;
          system.set(row, col, f.sub(system.at(row, col), right.at(k, j)));
        }
      }
    }
  }
  const auto basis = system.nullspace();
  const std::uint64_t count = checked_pow(f.p(), basis.size());
  if (count == 0 || count > limits.max_matrices_per_hom) {
    throw EnumerationCapExceeded(limits.max_matrices_per_hom,
                                 "equivariant matrix space of dimension " +
                                     std::to_string(basis.size()) + " exceeds the cap of " +
                                     std::to_string(limits.max_matrices_per_hom) + " matrices");
  }

  std::vector<Matrix> out;
  out.reserve(count);
  std::vector<Scalar> coeffs(basis.size(), 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (auto& c : coeffs) {
      c = static_cast<Scalar>(rest % f.p());
      rest /= f.p();
    }
    std::vector<Scalar> entries(unknowns, 0);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (coeffs[b] == 0) continue;
      for (std::size_t e = 0; e < unknowns; ++e) {
        entries[e] = f.add(entries[e], f.mul(coeffs[b], basis[b][e]));
      }
    }
    out.emplace_back(f, m, n, std::move(entries));
  }
  std::sort(out.begin(), out.end(),
            [](const Matrix& a, const Matrix& b) { return a.entries() < b.entries(); });
  return out;
}

void require_compatible(const Representation& r, const Representation& s, const Limits& limits) {
  if (!(r.field() == s.field())) {
    throw InvalidArgument("representations are over different fields");
  }
  if (r.dim() > limits.max_dim || s.dim() > limits.max_dim) {
    throw EnumerationCapExceeded(limits.max_dim, "dimension exceeds the configured cap of " +
                                                     std::to_string(limits.max_dim));
  }
}

}  // namespace

std::vector<RepHom> enumerate_rep_homs(const Representation& r, const Representation& s,
                                       const Limits& limits) {
  require_compatible(r, s, limits);
  const auto generators = greedy_generators(r.group()).generators;
  std::vector<RepHom> out;
  for (auto& beta : enumerate_group_homs(r.group(), s.group(), limits)) {
    for (auto& a : equivariant_matrices(r, s, beta.image, generators, limits)) {
      out.push_back({r, s, std::move(a), beta});
    }
  }
  return out;
}

std::optional<RepHom> rep_isomorphic(const Representation& r, const Representation& s,
                                     const Limits& limits) {
  require_compatible(r, s, limits);
  if (r.dim() != s.dim() || r.group().order() != s.group().order()) return std::nullopt;
  const auto generators = greedy_generators(r.group()).generators;
  for (auto& beta : enumerate_group_homs(r.group(), s.group(), limits)) {
    if (!beta.is_bijective()) continue;
    for (auto& a : equivariant_matrices(r, s, beta.image, generators, limits)) {
      if (a.is_invertible()) return RepHom{r, s, std::move(a), beta};
    }
  }
  return std::nullopt;
}

}  // namespace repgeo
