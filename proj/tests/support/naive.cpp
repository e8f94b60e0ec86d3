#include "naive.hpp"

namespace testsupport {

using namespace repgeo;

NaiveRep naive_copy(const Representation& rep) {
  NaiveRep out;
  out.p = rep.field().p();
  out.dim = rep.dim();
  out.order = rep.group().order();
  out.mul.assign(out.order, std::vector<std::size_t>(out.order));
  for (std::size_t a = 0; a < out.order; ++a) {
    for (std::size_t b = 0; b < out.order; ++b) out.mul[a][b] = rep.group().mul(a, b);
  }
  for (std::size_t g = 0; g < out.order; ++g) {
    std::vector<std::vector<long long>> m(out.dim, std::vector<long long>(out.dim));
    for (std::size_t r = 0; r < out.dim; ++r) {
      for (std::size_t c = 0; c < out.dim; ++c) m[r][c] = rep.action(g).at(r, c);
    }
    out.act.push_back(std::move(m));
  }
  return out;
}

namespace {

std::vector<RawLetter> random_word(std::mt19937_64& rng, std::size_t yvars) {
  std::vector<RawLetter> w;
  int len = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int i = 0; i < len; ++i) {
    int e = std::uniform_int_distribution<int>(-2, 1)(rng);
    if (e >= 0) ++e;
    w.push_back({std::uniform_int_distribution<std::size_t>(0, yvars - 1)(rng), e});
  }
  return w;
}

RawAtom random_atom(std::mt19937_64& rng, std::size_t xvars, std::size_t yvars) {
  RawAtom a;
  a.module = std::uniform_int_distribution<int>(0, 3)(rng) != 0;
  if (a.module) {
    int terms = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < terms; ++i) {
      a.terms.push_back({std::uniform_int_distribution<long long>(1, 5)(rng),
                         std::uniform_int_distribution<std::size_t>(0, xvars - 1)(rng),
                         random_word(rng, yvars)});
    }
  } else {
    a.word = random_word(rng, yvars);
  }
  return a;
}

std::string word_text(const std::vector<RawLetter>& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += "y" + std::to_string(w[i].var + 1) + "^" + std::to_string(w[i].exponent);
  }
  return s;
}

std::string atom_text(const RawAtom& a) {
  if (!a.module) return word_text(a.word) + " = 1";
  std::string s;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    const auto& t = a.terms[i];
    if (i) s += " + ";
    s += std::to_string(t.coefficient) + "*x" + std::to_string(t.xvar + 1) + "*" + word_text(t.word);
  }
  return s + " = 0";
}

std::size_t inverse(const NaiveRep& rep, std::size_t g) {
  for (std::size_t h = 0; h < rep.order; ++h) {
    if (rep.mul[g][h] == 0) return h;
  }
  return 0;
}

std::size_t eval_word(const NaiveRep& rep, const std::vector<RawLetter>& w,
                      const std::vector<std::size_t>& ys) {
  std::size_t acc = 0;
  for (const auto& l : w) {
    std::size_t base = l.exponent < 0 ? inverse(rep, ys[l.var]) : ys[l.var];
    for (int k = 0; k < (l.exponent < 0 ? -l.exponent : l.exponent); ++k) acc = rep.mul[acc][base];
  }
  return acc;
}

bool eval_atom(const NaiveRep& rep, const RawAtom& a, const std::vector<std::vector<long long>>& xs,
               const std::vector<std::size_t>& ys) {
  if (!a.module) return eval_word(rep, a.word, ys) == 0;
  std::vector<long long> sum(rep.dim, 0);
  for (const auto& t : a.terms) {
    const auto& m = rep.act[eval_word(rep, t.word, ys)];
    const auto& v = xs[t.xvar];
    for (std::size_t c = 0; c < rep.dim; ++c) {
      long long s = 0;
      for (std::size_t r = 0; r < rep.dim; ++r) s += v[r] * m[r][c];
      sum[c] += t.coefficient * s;
    }
  }
  for (auto s : sum) {
    if (s % rep.p != 0) return false;
  }
  return true;
}

}  // namespace

RawQid random_raw_qid(std::mt19937_64& rng, std::size_t xvars, std::size_t yvars,
                      std::size_t max_premises) {
  RawQid q{{}, random_atom(rng, xvars, yvars)};
  auto n = std::uniform_int_distribution<std::size_t>(0, max_premises)(rng);
  for (std::size_t i = 0; i < n; ++i) q.premises.push_back(random_atom(rng, xvars, yvars));
  return q;
}

std::string to_text(const RawQid& q) {
  std::string s;
  for (std::size_t i = 0; i < q.premises.size(); ++i) {
    if (i) s += " & ";
    s += atom_text(q.premises[i]);
  }
  return s + " => " + atom_text(q.conclusion);
}

bool naive_fulfills(const NaiveRep& rep, const RawQid& q, std::size_t xvars, std::size_t yvars) {
  std::size_t space = 1;
  for (std::size_t i = 0; i < rep.dim; ++i) space *= rep.p;
  std::size_t total = 1;
  for (std::size_t i = 0; i < xvars; ++i) total *= space;
  for (std::size_t i = 0; i < yvars; ++i) total *= rep.order;

  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    std::vector<std::vector<long long>> xs(xvars, std::vector<long long>(rep.dim));
    std::vector<std::size_t> ys(yvars);
    for (auto& y : ys) {
      y = rest % rep.order;
      rest /= rep.order;
    }
    for (auto& x : xs) {
      for (auto& c : x) {
        c = static_cast<long long>(rest % rep.p);
        rest /= rep.p;
      }
    }
    bool premises = true;
    for (const auto& a : q.premises) premises = premises && eval_atom(rep, a, xs, ys);
    if (premises && !eval_atom(rep, q.conclusion, xs, ys)) return false;
  }
  return true;
}

std::size_t naive_group_hom_count(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t n = g.order();
  const std::size_t m = h.order();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= m;
  std::size_t count = 0;
  std::vector<std::size_t> f(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (auto& v : f) {
      v = rest % m;
      rest /= m;
    }
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) ok = f[g.mul(a, b)] == h.mul(f[a], f[b]);
    }
    count += ok;
  }
  return count;
}

std::size_t naive_rep_hom_count(const Representation& r, const Representation& s) {
  const auto nr = naive_copy(r);
  const auto ns = naive_copy(s);
  const long long p = nr.p;
  const std::size_t n = nr.dim;
  const std::size_t m = ns.dim;

  std::vector<std::vector<std::size_t>> betas;
  {
    std::size_t total = 1;
    for (std::size_t i = 0; i < nr.order; ++i) total *= ns.order;
    std::vector<std::size_t> f(nr.order);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rest = idx;
      for (auto& v : f) {
        v = rest % ns.order;
        rest /= ns.order;
      }
      bool ok = true;
      for (std::size_t a = 0; a < nr.order && ok; ++a) {
        for (std::size_t b = 0; b < nr.order && ok; ++b) ok = f[nr.mul[a][b]] == ns.mul[f[a]][f[b]];
      }
      if (ok) betas.push_back(f);
    }
  }

  auto times = [&](const std::vector<long long>& v, const std::vector<std::vector<long long>>& mat,
                   std::size_t cols) {
    std::vector<long long> out(cols, 0);
    for (std::size_t c = 0; c < cols; ++c) {
      for (std::size_t k = 0; k < v.size(); ++k) out[c] += v[k] * mat[k][c];
      out[c] %= p;
    }
    return out;
  };

  std::size_t matrices = 1;
  for (std::size_t i = 0; i < n * m; ++i) matrices *= p;
  std::size_t vectors = 1;
  for (std::size_t i = 0; i < n; ++i) vectors *= p;

  std::size_t count = 0;
  for (const auto& beta : betas) {
    for (std::size_t idx = 0; idx < matrices; ++idx) {
      std::vector<std::vector<long long>> a(n, std::vector<long long>(m));
      std::size_t rest = idx;
      for (auto& row : a) {
        for (auto& e : row) {
          e = static_cast<long long>(rest % p);
          rest /= p;
        }
      }
      bool ok = true;
      for (std::size_t vi = 0; vi < vectors && ok; ++vi) {
        std::vector<long long> v(n);
        std::size_t vr = vi;
        for (auto& c : v) {
          c = static_cast<long long>(vr % p);
          vr /= p;
        }
        for (std::size_t g = 0; g < nr.order && ok; ++g) {
          ok = times(times(v, nr.act[g], n), a, m) == times(times(v, a, m), ns.act[beta[g]], m);
        }
      }
      count += ok;
    }
  }
  return count;
}

}  // namespace testsupport
