#include "picard/tangent.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "picard/errors.hpp"
#include "picard/linalg.hpp"
#include "truncation.hpp"

namespace picard {

void VectorFieldCochain::set_entry(const CechIndex& idx, std::vector<LaurentPoly> components) {
  if (idx.n() != n_ || idx.degree() != degree_) {
    throw std::invalid_argument("VectorFieldCochain::set_entry: index/degree mismatch");
  }
  if (static_cast<int>(components.size()) != n_ + 1) {
    throw std::invalid_argument("VectorFieldCochain::set_entry: need n+1 components");
  }
  bool all_zero = true;
  for (const auto& g : components) {
    if (g.nvars() != n_ + 1) {
      throw std::invalid_argument("VectorFieldCochain::set_entry: wrong variable count");
    }
    if (!g.is_zero()) all_zero = false;
  }
  if (all_zero) {
    entries_.erase(idx);
  } else {
    entries_.insert_or_assign(idx, std::move(components));
  }
}

std::vector<LaurentPoly> VectorFieldCochain::entry(const CechIndex& idx) const {
  auto it = entries_.find(idx);
  if (it != entries_.end()) return it->second;
  return std::vector<LaurentPoly>(static_cast<size_t>(n_ + 1), LaurentPoly(n_ + 1));
}

bool VectorFieldCochain::is_zero() const {
  for (const auto& [idx, comps] : entries_)
    for (const auto& g : comps)
      if (!g.is_zero()) return false;
  return true;
}

VectorFieldCochain operator*(const Rational& c, const VectorFieldCochain& v) {
  VectorFieldCochain out(v.n_, v.degree_);
  if (c == 0) return out;
  for (const auto& [idx, comps] : v.entries_) {
    std::vector<LaurentPoly> scaled;
    scaled.reserve(comps.size());
    for (const auto& g : comps) scaled.push_back(c * g);
    out.entries_.emplace(idx, std::move(scaled));
  }
  return out;
}

EulerField::EulerField(int nvars) {
  components_.reserve(static_cast<size_t>(nvars));
  for (int j = 0; j < nvars; ++j) components_.push_back(LaurentPoly::variable(nvars, j));
}

VectorFieldCochain euler_multiple(const FunctionCochain& h) {
  const int n = h.n();
  VectorFieldCochain out(n, h.degree());
  for (const auto& [idx, poly] : h.entries()) {
    std::vector<LaurentPoly> comps;
    comps.reserve(static_cast<size_t>(n + 1));
    for (int j = 0; j <= n; ++j) comps.push_back(poly * LaurentPoly::variable(n + 1, j));
    out.set_entry(idx, std::move(comps));
  }
  return out;
}

VectorFieldCochain lemma_generator(const HomogeneousPoly& F) {
  const int n = F.nvars() - 1;
  if (n < 3) throw std::invalid_argument("lemma_generator: requires n >= 3");
  VectorFieldCochain out(n, n - 2);
  LaurentPoly d0F = partial_derivative(F.poly(), 0);
  for (int i = 1; i <= n; ++i) {
    std::vector<int> omit;
    omit.reserve(static_cast<size_t>(n - 1));
    for (int j = 1; j <= n; ++j)
      if (j != i) omit.push_back(j);
    CechIndex S(std::move(omit), n);

    Exponent denom(n + 1);
    for (int j : S.entries()) denom[j] = -1;
    LaurentPoly denom_mono = LaurentPoly::monomial(denom, 1);
    Rational sign((i % 2 == 0) ? 1 : -1);

    std::vector<LaurentPoly> comps(static_cast<size_t>(n + 1), LaurentPoly(n + 1));
    comps[0] = (-sign) * (partial_derivative(F.poly(), i) * denom_mono);
    comps[static_cast<size_t>(i)] = sign * (d0F * denom_mono);
    out.set_entry(S, std::move(comps));
  }
  return out;
}

bool tangency_check(const VectorFieldCochain& v, const FReducer& red) {
  const int nv = v.nvars();
  std::vector<LaurentPoly> partials;
  partials.reserve(static_cast<size_t>(nv));
  for (int j = 0; j < nv; ++j) partials.push_back(partial_derivative(red.F().poly(), j));
  for (const auto& [idx, comps] : v.entries()) {
    LaurentPoly sum(nv);
    for (int j = 0; j < nv; ++j) sum += comps[static_cast<size_t>(j)] * partials[static_cast<size_t>(j)];
    if (!red.reduce(sum).is_zero()) return false;
  }
  return true;
}

VectorFieldCochain vf_differential(const VectorFieldCochain& v, const FReducer& red) {
  const int n = v.n();
  VectorFieldCochain out(n, v.degree() + 1);
  for (const CechIndex& T : CechIndex::all(n, v.degree() + 1)) {
    std::vector<LaurentPoly> sum(static_cast<size_t>(n + 1), LaurentPoly(n + 1));
    const auto& e = T.entries();
    bool any = false;
    for (size_t k = 0; k < e.size(); ++k) {
      std::vector<int> sub;
      sub.reserve(e.size() - 1);
      for (size_t l = 0; l < e.size(); ++l)
        if (l != k) sub.push_back(e[l]);
      CechIndex S(std::move(sub), n);
      auto it = v.entries().find(S);
      if (it == v.entries().end()) continue;
      any = true;
      for (int j = 0; j <= n; ++j) {
        if (k % 2 == 0) {
          sum[static_cast<size_t>(j)] += it->second[static_cast<size_t>(j)];
        } else {
          sum[static_cast<size_t>(j)] -= it->second[static_cast<size_t>(j)];
        }
      }
    }
    if (!any) continue;
    for (auto& g : sum) g = red.reduce(g);
    out.set_entry(T, std::move(sum));
  }
  return out;
}

bool euler_equivalence(const VectorFieldCochain& v, const VectorFieldCochain& w,
                       const FReducer& red) {
  if (v.degree() != w.degree() || v.n() != w.n()) {
    throw std::invalid_argument("euler_equivalence: cochain shapes differ");
  }
  const int n = v.n();
  std::vector<CechIndex> support;
  for (const auto& [idx, comps] : v.entries()) support.push_back(idx);
  for (const auto& [idx, comps] : w.entries()) {
    if (!v.entries().count(idx)) support.push_back(idx);
  }
  for (const CechIndex& S : support) {
    std::vector<LaurentPoly> vc = v.entry(S), wc = w.entry(S);
    std::vector<LaurentPoly> t;
    t.reserve(static_cast<size_t>(n + 1));
    bool all_zero = true;
    for (int j = 0; j <= n; ++j) {
      t.push_back(red.reduce(vc[static_cast<size_t>(j)] - wc[static_cast<size_t>(j)]));
      if (!t.back().is_zero()) all_zero = false;
    }
    if (all_zero) continue;
    // The candidate h is pinned by dividing the first inverted variable's
    // component: x_{j0} is a unit on U_S, so t = h*E mod F forces
    // h == t_{j0} / x_{j0}.
    int j0 = S.entries().front();
    Exponent inv(n + 1);
    inv[j0] = -1;
    LaurentPoly h = red.reduce(t[static_cast<size_t>(j0)] * LaurentPoly::monomial(inv, 1));
    for (int j = 0; j <= n; ++j) {
      LaurentPoly hx = red.reduce(h * LaurentPoly::variable(n + 1, j));
      if (!(hx == t[static_cast<size_t>(j)])) return false;
    }
  }
  return true;
}

namespace {

// (ordinal * (n+1) + component, exponent) -> coefficient
using AmbVec = std::map<std::pair<int, Exponent>, Rational>;

void amb_add(AmbVec& v, std::pair<int, Exponent> key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = v.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

struct TangentComplex {
  int n, d, B;
  const HomogeneousPoly& F;
  FReducer red;
  std::vector<LaurentPoly> partials;
  std::map<int, std::vector<CechIndex>> indices;      // level -> index sets
  std::map<int, std::map<CechIndex, int>> ordinals;   // level -> index -> ordinal
  std::map<int, std::vector<AmbVec>> zvecs;           // level -> tangency kernel basis
  std::map<int, std::vector<int>> zlevel_ordinal;     // parallel to zvecs: source ordinal
  std::map<int, std::vector<AmbVec>> evecs;           // level -> Euler spanning vectors
  std::map<int, uint64_t> dim_c;                      // level -> dim (Z/E)
  uint64_t total_basis = 0;

  TangentComplex(const HomogeneousPoly& F_, int B_)
      : n(F_.nvars() - 1), d(F_.degree()), B(B_), F(F_), red(F_) {
    for (int j = 0; j <= n; ++j) partials.push_back(partial_derivative(F.poly(), j));
  }

  void build_level(int p, const TruncationOptions& opts) {
    if (p < 0 || p > n - 1 || indices.count(p)) return;
    indices[p] = CechIndex::all(n, p);
    auto& ords = ordinals[p];
    for (size_t s = 0; s < indices[p].size(); ++s)
      ords[indices[p][s]] = static_cast<int>(s);

    auto& zs = zvecs[p];
    auto& zords = zlevel_ordinal[p];
    auto& es = evecs[p];
    for (size_t s = 0; s < indices[p].size(); ++s) {
      const CechIndex& S = indices[p][s];
      std::vector<Exponent> monos = detail::truncated_monomials(n, d, S.entries(), B, 1);
      total_basis += monos.size() * static_cast<size_t>(n + 1);
      if (total_basis > opts.max_basis) {
        throw ResourceLimitError("truncated tangent complex: basis cap exceeded");
      }
      // tangency kernel within this index set
      std::vector<std::pair<int, Exponent>> amb;
      amb.reserve(monos.size() * static_cast<size_t>(n + 1));
      detail::RowIndex target;
      std::vector<SparseCol> cols;
      for (const Exponent& a : monos) {
        for (int j = 0; j <= n; ++j) {
          amb.emplace_back(j, a);
          LaurentPoly prod = red.reduce(LaurentPoly::monomial(a, 1) * partials[static_cast<size_t>(j)]);
          SparseCol col;
          for (const auto& [e, c] : prod.terms()) col[target.id(0, e)] = c;
          cols.push_back(std::move(col));
        }
      }
      int base = static_cast<int>(s) * (n + 1);
      for (const SparseCol& combo : kernel_basis(cols)) {
        AmbVec z;
        for (const auto& [ci, cv] : combo) {
          const auto& [j, a] = amb[static_cast<size_t>(ci)];
          amb_add(z, {base + j, a}, cv);
        }
        zs.push_back(std::move(z));
        zords.push_back(static_cast<int>(s));
      }
      // Euler multiples h * E for truncated degree-0 h
      for (const Exponent& h : detail::truncated_monomials(n, d, S.entries(), B, 0)) {
        AmbVec v;
        for (int j = 0; j <= n; ++j) {
          Exponent he = h;
          he[j] += 1;
          LaurentPoly img = red.reduce(LaurentPoly::monomial(he, 1));
          for (const auto& [e, c] : img.terms()) amb_add(v, {base + j, e}, c);
        }
        if (!v.empty()) es.push_back(std::move(v));
      }
    }
    // dim of the level: dim Z - dim E (Euler multiples lie inside Z)
    detail::RowIndex rows;
    SpanBuilder sb;
    for (const AmbVec& ev : es) sb.add(translate(ev, rows));
    dim_c[p] = zs.size() - static_cast<uint64_t>(sb.rank());
  }

  static SparseCol translate(const AmbVec& v, detail::RowIndex& rows) {
    SparseCol col;
    for (const auto& [key, c] : v) col[rows.id(key.first, key.second)] = c;
    return col;
  }

  // image of an ambient vector at level p under the Cech differential
  AmbVec delta(const AmbVec& v, int p) const {
    AmbVec out;
    const auto& src = indices.at(p);
    const auto& dst_ord = ordinals.at(p + 1);
    for (const auto& [key, c] : v) {
      int s_ord = key.first / (n + 1);
      int j = key.first % (n + 1);
      const CechIndex& S = src[static_cast<size_t>(s_ord)];
      for (int t = 1; t <= n; ++t) {
        if (S.contains(t)) continue;
        auto [T, pos] = S.insert(t);
        Rational sign((pos % 2 == 0) ? 1 : -1);
        amb_add(out, {dst_ord.at(T) * (n + 1) + j, key.second}, sign * c);
      }
    }
    return out;
  }

  // rank of the induced differential (Z/E)^p -> (Z/E)^{p+1}
  int64_t rank_dbar(int p) {
    if (p < 0 || p + 1 > n - 1) return 0;
    detail::RowIndex rows;
    SpanBuilder sb;
    for (const AmbVec& ev : evecs.at(p + 1)) sb.add(translate(ev, rows));
    int64_t rank_e = sb.rank();
    for (const AmbVec& z : zvecs.at(p)) sb.add(translate(delta(z, p), rows));
    return sb.rank() - rank_e;
  }
};

uint64_t tangent_dim_at(const HomogeneousPoly& F, int q, int B, const TruncationOptions& opts) {
  TangentComplex cx(F, B);
  for (int p : {q - 1, q, q + 1}) cx.build_level(p, opts);
  int64_t r_q = cx.rank_dbar(q);
  int64_t r_qm1 = cx.rank_dbar(q - 1);
  return cx.dim_c.at(q) - static_cast<uint64_t>(r_q) - static_cast<uint64_t>(r_qm1);
}

}  // namespace

TruncatedDim truncated_h_tangent(const HomogeneousPoly& F, int q, int B,
                                 const TruncationOptions& opts) {
  const int n = F.nvars() - 1;
  if (q < 0 || q > n - 1) throw std::invalid_argument("truncated_h_tangent: q out of range");
  if (B < 0) throw std::invalid_argument("truncated_h_tangent: negative bound");
  TruncatedDim out;
  out.dim = tangent_dim_at(F, q, B, opts);
  if (B >= 1) out.stabilized = tangent_dim_at(F, q, B - 1, opts) == out.dim;
  return out;
}

TruncatedTangentBasis truncated_h_tangent_basis(const HomogeneousPoly& F, int q, int B,
                                                const TruncationOptions& opts) {
  const int n = F.nvars() - 1;
  if (q < 0 || q > n - 1) throw std::invalid_argument("truncated_h_tangent_basis: q out of range");
  TruncatedTangentBasis out;

  TangentComplex cx(F, B);
  for (int p : {q - 1, q, q + 1}) cx.build_level(p, opts);

  // cocycle lifts: z in Z^q with delta z in span(E^{q+1})
  std::vector<AmbVec> lifts;
  if (q + 1 > n - 1) {
    lifts = cx.zvecs.at(q);
  } else {
    detail::RowIndex rows;
    std::vector<SparseCol> cols;
    const auto& zq = cx.zvecs.at(q);
    for (const AmbVec& z : zq) cols.push_back(TangentComplex::translate(cx.delta(z, q), rows));
    for (const AmbVec& ev : cx.evecs.at(q + 1)) cols.push_back(TangentComplex::translate(ev, rows));
    for (const SparseCol& combo : kernel_basis(cols)) {
      AmbVec v;
      for (const auto& [ci, cv] : combo) {
        if (ci >= static_cast<int64_t>(zq.size())) continue;
        for (const auto& [key, c] : zq[static_cast<size_t>(ci)]) amb_add(v, key, cv * c);
      }
      if (!v.empty()) lifts.push_back(std::move(v));
    }
  }

  // trivial classes: delta of the level below, plus Euler multiples
  detail::RowIndex rows;
  SpanBuilder triv;
  if (q >= 1) {
    for (const AmbVec& z : cx.zvecs.at(q - 1)) {
      triv.add(TangentComplex::translate(cx.delta(z, q - 1), rows));
    }
  }
  for (const AmbVec& ev : cx.evecs.at(q)) triv.add(TangentComplex::translate(ev, rows));

  std::vector<AmbVec> reps;
  for (const AmbVec& v : lifts) {
    if (triv.add(TangentComplex::translate(v, rows))) reps.push_back(v);
  }

  out.dim = reps.size();
  uint64_t dim_check = cx.dim_c.at(q) - static_cast<uint64_t>(cx.rank_dbar(q)) -
                       static_cast<uint64_t>(cx.rank_dbar(q - 1));
  if (out.dim != dim_check) {
    throw std::logic_error("truncated_h_tangent_basis: representative count mismatch");
  }
  if (B >= 1) out.stabilized = tangent_dim_at(F, q, B - 1, opts) == out.dim;

  for (const AmbVec& v : reps) {
    VectorFieldCochain c(n, q);
    std::map<int, std::vector<LaurentPoly>> per_ordinal;
    for (const auto& [key, coef] : v) {
      int s_ord = key.first / (n + 1);
      int j = key.first % (n + 1);
      auto [it, inserted] =
          per_ordinal.try_emplace(s_ord, static_cast<size_t>(n + 1), LaurentPoly(n + 1));
      it->second[static_cast<size_t>(j)].add_term(key.second, coef);
    }
    for (auto& [s_ord, comps] : per_ordinal) {
      c.set_entry(cx.indices.at(q)[static_cast<size_t>(s_ord)], std::move(comps));
    }
    out.representatives.push_back(std::move(c));
  }
  return out;
}

}  // namespace picard
