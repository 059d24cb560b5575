#include "symkit/ideal.hpp"

#include "symkit/linalg.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace symkit {

namespace {

unsigned degree_of(const Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

int grevlex_compare(const Exponents& a, const Exponents& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t k = lo; k < hi; ++k) {
    da += a[k];
    db += b[k];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t k = hi; k-- > lo;) {
    if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
  }
  return 0;
}

struct Term {
  Exponents e;
  GaussianRational c;
};
using SPoly = std::vector<Term>;

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Exponents lcm_of(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
  return out;
}

Exponents quotient(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > 0 && b[k] > 0) return false;
  return true;
}

class Ring {
 public:
  Ring(std::vector<std::string> vars, TermOrder order) : vars_(std::move(vars)), order_(order) {
    sorted_ = vars_;
    std::sort(sorted_.begin(), sorted_.end(),
              [](const std::string& a, const std::string& b) { return variable_less(a, b); });
    // sorted_[k] == vars_[to_ring_[k]]
    to_ring_.resize(vars_.size());
    for (std::size_t k = 0; k < sorted_.size(); ++k)
      to_ring_[k] = static_cast<std::size_t>(std::find(vars_.begin(), vars_.end(), sorted_[k]) - vars_.begin());
  }

  const TermOrder& order() const { return order_; }
  std::size_t size() const { return vars_.size(); }

  SPoly from(const MultiPoly& p) const {
    std::vector<std::size_t> idx;
    for (const auto& v : p.variables()) {
      auto it = std::find(vars_.begin(), vars_.end(), v);
      if (it == vars_.end()) throw UnknownVariable(v);
      idx.push_back(static_cast<std::size_t>(it - vars_.begin()));
    }
    SPoly out;
    out.reserve(p.size());
    for (const auto& [e, c] : p.terms()) {
      Exponents f(vars_.size(), 0);
      for (std::size_t k = 0; k < e.size(); ++k) f[idx[k]] = e[k];
      out.push_back({std::move(f), c});
    }
    sort(out);
    return out;
  }

  MultiPoly to(const SPoly& p) const {
    MultiPoly::TermMap terms;
    for (const auto& t : p) {
      Exponents f(sorted_.size());
      for (std::size_t k = 0; k < sorted_.size(); ++k) f[k] = t.e[to_ring_[k]];
      terms.emplace(std::move(f), t.c);
    }
    return MultiPoly::from_terms(sorted_, std::move(terms));
  }

  void sort(SPoly& p) const {
    std::sort(p.begin(), p.end(), [this](const Term& a, const Term& b) { return order_.compare(a.e, b.e) > 0; });
  }

  // f[fstart..] - c * x^m * g[gstart..]
  SPoly sub_mul(const SPoly& f, std::size_t fstart, const GaussianRational& c, const Exponents& m,
                const SPoly& g, std::size_t gstart) const {
    SPoly out;
    out.reserve(f.size() - fstart + g.size() - gstart);
    std::size_t i = fstart, j = gstart;
    Exponents shifted;
    auto shift = [&](std::size_t jj) {
      shifted = g[jj].e;
      for (std::size_t k = 0; k < shifted.size(); ++k) shifted[k] += m[k];
    };
    if (j < g.size()) shift(j);
    while (i < f.size() || j < g.size()) {
      if (j >= g.size()) {
        out.push_back(f[i++]);
        continue;
      }
      int cmp = i < f.size() ? order_.compare(f[i].e, shifted) : -1;
      if (cmp > 0) {
        out.push_back(f[i++]);
      } else if (cmp < 0) {
        out.push_back({shifted, -(c * g[j].c)});
        if (++j < g.size()) shift(j);
      } else {
        GaussianRational v = f[i].c - c * g[j].c;
        if (!v.is_zero()) out.push_back({shifted, std::move(v)});
        ++i;
        if (++j < g.size()) shift(j);
      }
    }
    return out;
  }

  // Full reduction against monic polynomials.
  SPoly reduce(SPoly f, const std::vector<const SPoly*>& basis) const {
    SPoly rem;
    std::size_t pos = 0;
    while (pos < f.size()) {
      const SPoly* div = nullptr;
      for (const auto* g : basis) {
        if (divides(g->front().e, f[pos].e)) {
          div = g;
          break;
        }
      }
      if (!div) {
        rem.push_back(std::move(f[pos]));
        ++pos;
        continue;
      }
      Exponents m = quotient(f[pos].e, div->front().e);
      GaussianRational c = f[pos].c;
      f = sub_mul(f, pos + 1, c, m, *div, 1);
      pos = 0;
    }
    return rem;
  }

  SPoly s_poly(const SPoly& f, const SPoly& g) const {
    Exponents l = lcm_of(f.front().e, g.front().e);
    Exponents mf = quotient(l, f.front().e);
    Exponents mg = quotient(l, g.front().e);
    SPoly a;
    a.reserve(f.size());
    for (std::size_t k = 1; k < f.size(); ++k) {
      Exponents e = f[k].e;
      for (std::size_t v = 0; v < e.size(); ++v) e[v] += mf[v];
      a.push_back({std::move(e), f[k].c});
    }
    return sub_mul(a, 0, GaussianRational(1), mg, g, 1);
  }

 private:
  std::vector<std::string> vars_;
  std::vector<std::string> sorted_;
  std::vector<std::size_t> to_ring_;
  TermOrder order_;
};

void make_monic(SPoly& p) {
  if (p.empty() || p.front().c.is_one()) return;
  GaussianRational inv = p.front().c.inverse();
  for (auto& t : p) t.c *= inv;
}

std::vector<std::string> union_variables(const std::vector<MultiPoly>& gens) {
  std::vector<std::string> vars;
  for (const auto& g : gens) vars = merge_variables(vars, g.variables());
  return vars;
}

struct Pair {
  std::size_t i, j;
  Exponents lcm;
  unsigned sugar;
};

std::vector<SPoly> groebner(std::vector<SPoly> input, const Ring& ring) {
  std::vector<SPoly> basis;
  std::vector<unsigned> sugar;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add = [&](SPoly p, unsigned s) {
    make_monic(p);
    std::size_t n = basis.size();
    basis.push_back(std::move(p));
    sugar.push_back(s);
    const Exponents& ln = basis[n].front().e;
    for (std::size_t k = 0; k < n; ++k) {
      const Exponents& lk = basis[k].front().e;
      if (coprime(lk, ln)) continue;
      Exponents l = lcm_of(lk, ln);
      unsigned dl = degree_of(l);
      unsigned sg = std::max(sugar[k] + dl - degree_of(lk), sugar[n] + dl - degree_of(ln));
      pairs.push_back({k, n, std::move(l), sg});
      pending.insert({k, n});
    }
  };

  for (auto& p : input) {
    if (p.empty()) continue;
    unsigned d = 0;
    for (const auto& t : p) d = std::max(d, degree_of(t.e));
    add(std::move(p), d);
  }

  long reductions = 0;
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      int c = ring.order().compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    Pair pr = *best;
    pairs.erase(best);
    pending.erase({pr.i, pr.j});

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!divides(basis[k].front().e, pr.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) chain = true;
    }
    if (chain) continue;

    if (++reductions > kPairBudget) throw BudgetExceeded("Groebner basis pair budget exceeded");
    std::vector<const SPoly*> view;
    for (const auto& b : basis) view.push_back(&b);
    SPoly h = ring.reduce(ring.s_poly(basis[pr.i], basis[pr.j]), view);
    if (!h.empty()) add(std::move(h), pr.sugar);
  }

  // Minimize, then interreduce into the unique reduced basis.
  std::vector<SPoly> sorted = std::move(basis);
  std::sort(sorted.begin(), sorted.end(),
            [&](const SPoly& a, const SPoly& b) { return ring.order().compare(a.front().e, b.front().e) < 0; });
  std::vector<SPoly> minimal;
  for (auto& p : sorted) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const SPoly& q) { return divides(q.front().e, p.front().e); });
    if (!redundant) minimal.push_back(std::move(p));
  }
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const SPoly*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != k) others.push_back(&minimal[j]);
    SPoly tail(minimal[k].begin() + 1, minimal[k].end());
    SPoly reduced = ring.reduce(std::move(tail), others);
    reduced.insert(reduced.begin(), minimal[k].front());
    minimal[k] = std::move(reduced);
    make_monic(minimal[k]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const SPoly& a, const SPoly& b) { return ring.order().compare(a.front().e, b.front().e) > 0; });
  return minimal;
}

std::vector<std::string> normal_form_variables(const MultiPoly& p, const IdealBasis& basis) {
  std::vector<std::string> vars = basis.variables;
  std::vector<std::string> extra;
  for (const auto& v : p.variables())
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) extra.push_back(v);
  vars.insert(vars.end(), extra.begin(), extra.end());
  return vars;
}

}  // namespace

int TermOrder::compare(const Exponents& a, const Exponents& b) const {
  switch (kind) {
    case OrderKind::lex:
      for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return a[k] > b[k] ? 1 : -1;
      return 0;
    case OrderKind::block: {
      std::size_t s = std::min(split, a.size());
      if (int c = grevlex_compare(a, b, 0, s); c != 0) return c;
      return grevlex_compare(a, b, s, a.size());
    }
    case OrderKind::grevlex:
    default:
      return grevlex_compare(a, b, 0, a.size());
  }
}

std::string TermOrder::name() const {
  switch (kind) {
    case OrderKind::lex:
      return "lex";
    case OrderKind::block:
      return "block(" + std::to_string(split) + ")";
    case OrderKind::grevlex:
    default:
      return "grevlex";
  }
}

bool IdealBasis::is_unit() const {
  return std::any_of(generators.begin(), generators.end(),
                     [](const MultiPoly& g) { return !g.is_zero() && g.is_constant(); });
}

IdealBasis buchberger(const std::vector<MultiPoly>& gens, TermOrder order, std::vector<std::string> variables) {
  if (variables.empty()) variables = union_variables(gens);
  Ring ring(variables, order);
  std::vector<SPoly> input;
  for (const auto& g : gens)
    if (!g.is_zero()) input.push_back(ring.from(g));
  IdealBasis out;
  out.variables = variables;
  out.order = order;
  out.groebner = true;
  for (const auto& p : groebner(std::move(input), ring)) out.generators.push_back(ring.to(p));
  return out;
}

MultiPoly normal_form(const MultiPoly& p, const IdealBasis& basis) {
  if (!basis.groebner) throw NotGroebner();
  Ring ring(normal_form_variables(p, basis), basis.order);
  std::vector<SPoly> gs;
  for (const auto& g : basis.generators) {
    gs.push_back(ring.from(g));
    make_monic(gs.back());
  }
  std::vector<const SPoly*> view;
  for (const auto& g : gs) view.push_back(&g);
  MultiPoly r = ring.to(ring.reduce(ring.from(p), view));
  return r.extended(merge_variables(r.variables(), p.variables()));
}

bool ideal_contains(const MultiPoly& p, const IdealBasis& groebner_basis) {
  return normal_form(p, groebner_basis).is_zero();
}

bool ideal_contains(const MultiPoly& p, const std::vector<MultiPoly>& gens) {
  if (p.is_zero()) return true;
  return ideal_contains(p, buchberger(gens));
}

bool ideal_contains_all(const std::vector<MultiPoly>& ps, const std::vector<MultiPoly>& gens) {
  IdealBasis gb = buchberger(gens);
  return std::all_of(ps.begin(), ps.end(), [&](const MultiPoly& p) { return ideal_contains(p, gb); });
}

bool ideals_equal(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
  return ideal_contains_all(a, b) && ideal_contains_all(b, a);
}

IdealBasis eliminate(const std::vector<MultiPoly>& gens, const std::vector<std::string>& drop) {
  std::vector<std::string> all = union_variables(gens);
  std::vector<std::string> first, rest;
  for (const auto& v : all) {
    if (std::find(drop.begin(), drop.end(), v) != drop.end()) first.push_back(v);
    else rest.push_back(v);
  }
  std::vector<std::string> ring = first;
  ring.insert(ring.end(), rest.begin(), rest.end());
  IdealBasis gb = buchberger(gens, TermOrder::block(first.size()), ring);
  IdealBasis out;
  out.variables = rest;
  out.order = TermOrder::grevlex();
  for (const auto& g : gb.generators) {
    auto used = g.support();
    bool free_of_dropped = std::none_of(used.begin(), used.end(), [&](const std::string& v) {
      return std::find(first.begin(), first.end(), v) != first.end();
    });
    if (free_of_dropped) out.generators.push_back(g.trimmed().extended(rest));
  }
  // A Groebner basis for the block order restricts to one for the kept block.
  out.groebner = true;
  return out;
}

Exponents leading_exponents(const MultiPoly& p, const IdealBasis& ring_basis) {
  Ring ring(normal_form_variables(p, ring_basis), ring_basis.order);
  SPoly s = ring.from(p);
  if (s.empty()) return {};
  return s.front().e;
}

bool satisfies_s_pair_criterion(const IdealBasis& basis) {
  Ring ring(basis.variables, basis.order);
  std::vector<SPoly> gs;
  for (const auto& g : basis.generators) {
    gs.push_back(ring.from(g));
    make_monic(gs.back());
  }
  std::vector<const SPoly*> view;
  for (const auto& g : gs) view.push_back(&g);
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (!ring.reduce(ring.s_poly(gs[i], gs[j]), view).empty()) return false;
  return true;
}

namespace {

std::vector<Exponents> leading_monomials(const IdealBasis& gb) {
  Ring ring(gb.variables, gb.order);
  std::vector<Exponents> lms;
  for (const auto& g : gb.generators) {
    SPoly s = ring.from(g);
    if (!s.empty()) lms.push_back(s.front().e);
  }
  return lms;
}

void for_each_monomial(std::size_t nvars, int degree, const std::function<void(const Exponents&)>& fn) {
  Exponents e(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (nvars == 0) {
      if (left == 0) fn(e);
      return;
    }
    if (k + 1 == nvars) {
      e[k] = static_cast<std::uint32_t>(left);
      fn(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[k] = static_cast<std::uint32_t>(a);
      rec(k + 1, left - a);
    }
    e[k] = 0;
  };
  rec(0, degree);
}

}  // namespace

int krull_dimension(const IdealBasis& groebner_basis) {
  if (!groebner_basis.groebner) throw NotGroebner();
  auto lms = leading_monomials(groebner_basis);
  for (const auto& m : lms)
    if (degree_of(m) == 0) return -1;
  const std::size_t n = groebner_basis.variables.size();
  for (int s = static_cast<int>(n); s >= 0; --s) {
    for (const auto& subset : combinations(static_cast<int>(n), s)) {
      std::vector<bool> in(n, false);
      for (int v : subset) in[static_cast<std::size_t>(v)] = true;
      bool ok = std::all_of(lms.begin(), lms.end(), [&](const Exponents& m) {
        for (std::size_t k = 0; k < n; ++k)
          if (m[k] > 0 && !in[k]) return true;
        return false;
      });
      if (ok) return s;
    }
  }
  return -1;
}

long hilbert_function(const IdealBasis& groebner_basis, int degree) {
  if (!groebner_basis.groebner) throw NotGroebner();
  auto lms = leading_monomials(groebner_basis);
  long count = 0;
  for_each_monomial(groebner_basis.variables.size(), degree, [&](const Exponents& e) {
    if (std::none_of(lms.begin(), lms.end(), [&](const Exponents& m) { return divides(m, e); })) ++count;
  });
  return count;
}

long local_length(const std::vector<MultiPoly>& gens, const std::vector<std::string>& variables,
                  const std::map<std::string, GaussianRational>& point, int max_order) {
  std::map<std::string, MultiPoly> shift;
  for (const auto& v : variables) {
    auto it = point.find(v);
    if (it == point.end()) throw MissingAssignment(v);
    shift.emplace(v, MultiPoly::variable(v) + MultiPoly(it->second));
  }
  std::vector<MultiPoly> translated;
  for (const auto& g : gens) translated.push_back(substitute(g, shift));

  long previous = -1;
  for (int order = 1; order <= max_order; ++order) {
    std::vector<MultiPoly> ideal = translated;
    for_each_monomial(variables.size(), order, [&](const Exponents& e) {
      MultiPoly m(1);
      for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k] > 0) m *= MultiPoly::variable(variables[k]).pow(e[k]);
      ideal.push_back(m);
    });
    IdealBasis gb = buchberger(ideal, TermOrder::grevlex(), variables);
    long length = 0;
    if (!gb.is_unit())
      for (int d = 0; d < order; ++d) length += hilbert_function(gb, d);
    if (length == previous) return length;
    previous = length;
  }
  throw std::runtime_error("local length did not stabilise: point is not isolated");
}

}  // namespace symkit
