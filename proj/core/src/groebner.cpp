#include "picard/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace picard {

namespace {

// true if a > b under the given order (nonnegative exponents assumed)
bool mono_greater(const Exponent& a, const Exponent& b, MonomialOrder order) {
  if (order == MonomialOrder::Lex) return a > b;
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  for (int i = a.nvars() - 1; i >= 0; --i) {
    int diff = a[i] - b[i];
    if (diff != 0) return diff < 0;
  }
  return false;
}

Exponent leading(const LaurentPoly& p, MonomialOrder order) {
  auto it = p.terms().begin();
  Exponent best = it->first;
  for (++it; it != p.terms().end(); ++it) {
    if (mono_greater(it->first, best, order)) best = it->first;
  }
  return best;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (int i = 0; i < a.nvars(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm_exp(const Exponent& a, const Exponent& b) {
  Exponent out(a.nvars());
  for (int i = 0; i < a.nvars(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

LaurentPoly make_monic(const LaurentPoly& p, MonomialOrder order) {
  Exponent lt = leading(p, order);
  Rational inv = 1 / p.coefficient_of(lt);
  return inv * p;
}

struct Divider {
  const std::vector<LaurentPoly>& basis;
  std::vector<Exponent> leads;
  MonomialOrder order;

  Divider(const std::vector<LaurentPoly>& b, MonomialOrder o) : basis(b), order(o) {
    leads.reserve(b.size());
    for (const auto& g : b) leads.push_back(leading(g, o));
  }

  // full division; quotients accumulated when requested
  LaurentPoly remainder(LaurentPoly work, std::vector<LaurentPoly>* quotients) const {
    LaurentPoly rem(work.nvars());
    while (!work.is_zero()) {
      Exponent lt = leading(work, order);
      Rational lc = work.coefficient_of(lt);
      bool hit = false;
      for (size_t k = 0; k < basis.size(); ++k) {
        if (!divides(leads[k], lt)) continue;
        Rational f = lc / basis[k].coefficient_of(leads[k]);
        LaurentPoly factor = LaurentPoly::monomial(lt - leads[k], f);
        work -= factor * basis[k];
        if (quotients) (*quotients)[k] += factor;
        hit = true;
        break;
      }
      if (!hit) {
        rem.add_term(lt, lc);
        work.add_term(lt, -lc);
      }
    }
    return rem;
  }
};

LaurentPoly s_poly(const LaurentPoly& f, const LaurentPoly& g, MonomialOrder order) {
  Exponent lf = leading(f, order), lg = leading(g, order);
  Exponent l = lcm_exp(lf, lg);
  LaurentPoly mf = LaurentPoly::monomial(l - lf, 1 / f.coefficient_of(lf));
  LaurentPoly mg = LaurentPoly::monomial(l - lg, 1 / g.coefficient_of(lg));
  return mf * f - mg * g;
}

}  // namespace

Exponent GroebnerBasis::leading_exponent(size_t k) const {
  return leading(polys_[k], order_);
}

GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerOptions& opts) {
  if (ideal.generators.empty()) {
    throw std::invalid_argument("buchberger: empty generator list");
  }
  const int nvars = ideal.generators.front().nvars();
  std::vector<LaurentPoly> basis;
  for (const auto& g : ideal.generators) {
    if (g.poly().is_zero()) throw std::invalid_argument("buchberger: zero generator");
    if (g.nvars() != nvars) {
      throw std::invalid_argument("buchberger: generators in different rings");
    }
    basis.push_back(make_monic(g.poly(), opts.order));
  }

  // pending pairs, normal selection: smallest lcm degree first
  using Pair = std::pair<size_t, size_t>;
  auto pair_key = [&](size_t i, size_t j) {
    Exponent l = lcm_exp(leading(basis[i], opts.order), leading(basis[j], opts.order));
    return std::tuple<int, Exponent, size_t, size_t>(l.total_degree(), l, i, j);
  };
  std::set<std::tuple<int, Exponent, size_t, size_t>> pending;
  std::set<Pair> pending_pairs;
  auto push_pair = [&](size_t i, size_t j) {
    if (i > j) std::swap(i, j);
    pending.insert(pair_key(i, j));
    pending_pairs.insert({i, j});
  };
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

  uint64_t steps = 0;
  while (!pending.empty()) {
    auto [deg, l, i, j] = *pending.begin();
    pending.erase(pending.begin());
    pending_pairs.erase({i, j});

    Exponent li = leading(basis[i], opts.order);
    Exponent lj = leading(basis[j], opts.order);
    Exponent lij = lcm_exp(li, lj);
    // first Buchberger criterion: coprime leading terms
    if (lij == li + lj) continue;
    // chain criterion: a third element divides the lcm and both of its
    // pairs with i, j were already handled
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (!divides(leading(basis[k], opts.order), lij)) continue;
      Pair ik{std::min(i, k), std::max(i, k)};
      Pair jk{std::min(j, k), std::max(j, k)};
      if (!pending_pairs.count(ik) && !pending_pairs.count(jk)) skip = true;
    }
    if (skip) continue;

    if (++steps > opts.step_cap) {
      throw ResourceLimitError("buchberger: step cap of " +
                               std::to_string(opts.step_cap) + " pair reductions exceeded");
    }
    Divider div(basis, opts.order);
    LaurentPoly r = div.remainder(s_poly(basis[i], basis[j], opts.order), nullptr);
    if (r.is_zero()) continue;
    basis.push_back(make_monic(r, opts.order));
    size_t idx = basis.size() - 1;
    for (size_t k = 0; k < idx; ++k) push_pair(k, idx);
  }

  // minimalize: drop elements whose lead is divisible by another's lead
  std::vector<LaurentPoly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    Exponent li = leading(basis[i], opts.order);
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      Exponent lj = leading(basis[j], opts.order);
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // reduce each element against the others until stable
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<LaurentPoly> others;
      others.reserve(minimal.size() - 1);
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Divider div(others, opts.order);
      LaurentPoly r = div.remainder(minimal[i], nullptr);
      if (!(r == minimal[i])) {
        minimal[i] = make_monic(r, opts.order);
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const LaurentPoly& a, const LaurentPoly& b) {
    return mono_greater(leading(a, opts.order), leading(b, opts.order), opts.order);
  });
  return GroebnerBasis(std::move(minimal), opts.order);
}

LaurentPoly normal_form(const LaurentPoly& p, const GroebnerBasis& G) {
  if (!p.all_exponents_nonnegative()) {
    throw std::invalid_argument("normal_form: input has negative exponents");
  }
  Divider div(G.polys(), G.order());
  return div.remainder(p, nullptr);
}

DivisionResult divide(const LaurentPoly& p, const GroebnerBasis& G) {
  if (!p.all_exponents_nonnegative()) {
    throw std::invalid_argument("divide: input has negative exponents");
  }
  DivisionResult res{LaurentPoly(p.nvars()), {}};
  res.quotients.assign(G.polys().size(), LaurentPoly(p.nvars()));
  Divider div(G.polys(), G.order());
  res.remainder = div.remainder(p, &res.quotients);
  return res;
}

bool is_irrelevant(const Ideal& ideal, const BuchbergerOptions& opts) {
  GroebnerBasis G = buchberger(ideal, opts);
  const int nvars = ideal.generators.front().nvars();
  std::vector<bool> covered(static_cast<size_t>(nvars), false);
  for (size_t k = 0; k < G.polys().size(); ++k) {
    Exponent lt = G.leading_exponent(k);
    int nz = -1;
    bool pure = true;
    for (int i = 0; i < nvars; ++i) {
      if (lt[i] != 0) {
        if (nz >= 0) {
          pure = false;
          break;
        }
        nz = i;
      }
    }
    if (pure && nz >= 0) covered[static_cast<size_t>(nz)] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

HypothesisReport check_hypotheses(const HomogeneousPoly& F, int n,
                                  const BuchbergerOptions& opts) {
  HypothesisReport rep;
  const int nvars = F.nvars();
  if (nvars != n + 1) {
    throw std::invalid_argument("check_hypotheses: F must live in n+1 variables");
  }
  rep.degree_ok = F.degree() == n + 1 && !F.poly().is_zero();

  Exponent top(nvars);
  top[0] = F.degree();
  rep.cover_ok = F.poly().coefficient_of(top) != 0;

  std::vector<HomogeneousPoly> partials;
  for (int i = 0; i < nvars; ++i) {
    LaurentPoly d = partial_derivative(F.poly(), i);
    if (!d.is_zero()) partials.emplace_back(std::move(d), F.degree() - 1);
  }
  rep.smooth_ok = !partials.empty() && is_irrelevant(Ideal{std::move(partials)}, opts);

  rep.n_ok = n >= 3;
  rep.k3_mode = n == 3;
  return rep;
}

}  // namespace picard
