#include "picard/cech.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "picard/errors.hpp"
#include "picard/linalg.hpp"
#include "truncation.hpp"

namespace picard {

namespace detail {

std::vector<Exponent> truncated_monomials(int n, int d, const std::vector<int>& S, int B,
                                          int total) {
  std::vector<int> lo(static_cast<size_t>(n) + 1, 0);
  for (int j : S) lo[static_cast<size_t>(j)] = -B;
  std::vector<Exponent> out;
  std::vector<int> acc(static_cast<size_t>(n) + 1, 0);
  // choose a_1..a_n; a_0 = total - sum must land in [0, d)
  auto rec = [&](auto&& self, int j, int partial_sum) -> void {
    if (j == n + 1) {
      int a0 = total - partial_sum;
      if (a0 >= 0 && a0 < d) {
        acc[0] = a0;
        Exponent e(n + 1);
        for (int i = 0; i <= n; ++i) e[i] = acc[static_cast<size_t>(i)];
        out.push_back(e);
      }
      return;
    }
    int tail_lo = 0;
    for (int k = j + 1; k <= n; ++k) tail_lo += lo[static_cast<size_t>(k)];
    int hi = total - partial_sum - tail_lo;
    for (int v = lo[static_cast<size_t>(j)]; v <= hi; ++v) {
      acc[static_cast<size_t>(j)] = v;
      self(self, j + 1, partial_sum + v);
    }
  };
  rec(rec, 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

CechIndex::CechIndex(std::vector<int> entries, int n) : entries_(std::move(entries)), n_(n) {
  if (entries_.empty()) throw std::invalid_argument("CechIndex: empty index");
  for (size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k] < 1 || entries_[k] > n_) {
      throw std::invalid_argument("CechIndex: entry out of range [1, n]");
    }
    if (k > 0 && entries_[k] <= entries_[k - 1]) {
      throw std::invalid_argument("CechIndex: entries must be strictly increasing");
    }
  }
}

bool CechIndex::contains(int i) const {
  return std::binary_search(entries_.begin(), entries_.end(), i);
}

std::pair<CechIndex, int> CechIndex::insert(int t) const {
  if (contains(t)) throw std::invalid_argument("CechIndex::insert: entry already present");
  std::vector<int> e = entries_;
  auto it = std::lower_bound(e.begin(), e.end(), t);
  int pos = static_cast<int>(it - e.begin());
  e.insert(it, t);
  return {CechIndex(std::move(e), n_), pos};
}

std::vector<CechIndex> CechIndex::all(int n, int degree) {
  std::vector<CechIndex> out;
  int size = degree + 1;
  if (size < 1 || size > n) return out;
  std::vector<int> pick(static_cast<size_t>(size));
  auto rec = [&](auto&& self, int start, int k) -> void {
    if (k == size) {
      out.emplace_back(pick, n);
      return;
    }
    for (int v = start; v <= n; ++v) {
      pick[static_cast<size_t>(k)] = v;
      self(self, v + 1, k + 1);
    }
  };
  rec(rec, 1, 0);
  return out;
}

std::string CechIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t k = 0; k < entries_.size(); ++k) {
    if (k) os << ',';
    os << entries_[k];
  }
  os << ')';
  return os.str();
}

void FunctionCochain::set_entry(const CechIndex& idx, LaurentPoly p) {
  if (idx.n() != n_ || idx.degree() != degree_) {
    throw std::invalid_argument("FunctionCochain::set_entry: index/degree mismatch");
  }
  if (p.nvars() != n_ + 1) {
    throw std::invalid_argument("FunctionCochain::set_entry: wrong variable count");
  }
  if (p.is_zero()) {
    entries_.erase(idx);
  } else {
    entries_.insert_or_assign(idx, std::move(p));
  }
}

LaurentPoly FunctionCochain::entry(const CechIndex& idx) const {
  auto it = entries_.find(idx);
  return it == entries_.end() ? LaurentPoly(n_ + 1) : it->second;
}

bool FunctionCochain::is_zero() const {
  for (const auto& [idx, p] : entries_)
    if (!p.is_zero()) return false;
  return true;
}

FReducer::FReducer(HomogeneousPoly F) : F_(std::move(F)), rewrite_(F_.nvars()) {
  const int d = F_.degree();
  Exponent top(F_.nvars());
  top[0] = d;
  Rational c = F_.poly().coefficient_of(top);
  if (c == 0) {
    throw std::invalid_argument(
        "FReducer: F has no x0^d term; the point [1:0:...:0] lies on X");
  }
  // x0^d == rewrite_  (mod F), where rewrite_ = x0^d - F/c
  rewrite_ = LaurentPoly::monomial(top, 1) - (1 / c) * F_.poly();
}

LaurentPoly FReducer::reduce(const LaurentPoly& p) const {
  return reduce_with_quotient(p).first;
}

std::pair<LaurentPoly, LaurentPoly> FReducer::reduce_with_quotient(
    const LaurentPoly& p) const {
  const int d = F_.degree();
  const int nv = F_.nvars();
  Exponent top(nv);
  top[0] = d;
  Rational c = F_.poly().coefficient_of(top);

  LaurentPoly cur = p;
  LaurentPoly quotient(nv);
  for (;;) {
    int e0 = cur.max_exponent(0);
    if (cur.is_zero() || e0 < d) break;
    // extract the slice of terms with the maximal x0-exponent
    LaurentPoly slice_shifted(nv);  // slice / x0^{e0 - d}: x0-exponent exactly d
    for (const auto& [e, coef] : cur.terms()) {
      if (e[0] != e0) continue;
      Exponent e2 = e;
      e2[0] = d;
      slice_shifted.add_term(e2, coef);
    }
    Exponent shift(nv);
    shift[0] = e0 - d;
    LaurentPoly shift_mono = LaurentPoly::monomial(shift, 1);
    Exponent down(nv);
    down[0] = -d;
    LaurentPoly slice_over_x0d(nv);
    for (const auto& [e, coef] : slice_shifted.terms()) slice_over_x0d.add_term(e + down, coef);
    // replace slice = (slice/x0^d) * x0^d by (slice/x0^d) * rewrite_
    cur -= shift_mono * slice_shifted;
    cur += shift_mono * (slice_over_x0d * rewrite_);
    quotient += (1 / c) * (shift_mono * slice_over_x0d);
  }
  return {cur, quotient};
}

LaurentPoly reduce_mod_F(const LaurentPoly& p, const HomogeneousPoly& F) {
  return FReducer(F).reduce(p);
}

FunctionCochain cech_differential(const FunctionCochain& c, const FReducer& red) {
  const int n = c.n();
  FunctionCochain out(n, c.degree() + 1);
  for (const CechIndex& T : CechIndex::all(n, c.degree() + 1)) {
    LaurentPoly sum(n + 1);
    const auto& e = T.entries();
    for (size_t k = 0; k < e.size(); ++k) {
      std::vector<int> sub;
      sub.reserve(e.size() - 1);
      for (size_t l = 0; l < e.size(); ++l)
        if (l != k) sub.push_back(e[l]);
      LaurentPoly part = c.entry(CechIndex(std::move(sub), n));
      if (part.is_zero()) continue;
      if (k % 2 == 0) {
        sum += part;
      } else {
        sum -= part;
      }
    }
    if (!sum.is_zero()) out.set_entry(T, red.reduce(sum));
  }
  return out;
}

bool is_cocycle(const FunctionCochain& c, const FReducer& red) {
  return cech_differential(c, red).is_zero();
}

Rational top_coefficient_functional(const FunctionCochain& c, const FReducer& red) {
  const int n = c.n();
  if (red.degree() != n + 1) {
    throw std::invalid_argument("top_coefficient_functional: requires deg F = n+1");
  }
  if (c.degree() != n - 1) {
    throw std::invalid_argument("top_coefficient_functional: cochain degree must be n-1");
  }
  std::vector<int> full(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) full[static_cast<size_t>(i - 1)] = i;
  LaurentPoly top = c.entry(CechIndex(std::move(full), n));
  Exponent target(n + 1);
  target[0] = n;
  for (int i = 1; i <= n; ++i) target[i] = -1;
  return top.coefficient_of(target);
}

namespace {

uint64_t binom(long a, long b) {
  if (b < 0 || a < b) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  if (!r.fits_ulong_p()) throw std::overflow_error("binomial overflows");
  return static_cast<uint64_t>(r.get_ui());
}

}  // namespace

uint64_t pn_cohomology_dim(int n, long k, int q) {
  if (n < 1 || q < 0) throw std::invalid_argument("pn_cohomology_dim: bad arguments");
  if (q == 0 && k >= 0) return binom(n + k, n);
  if (q == n && k <= -n - 1) return binom(-k - 1, n);
  return 0;
}

std::map<int, uint64_t> hypersurface_O_cohomology_dims(int n, int d) {
  if (n < 2 || d < 1) throw std::invalid_argument("hypersurface_O_cohomology_dims: need n >= 2, d >= 1");
  std::map<int, uint64_t> dims;
  dims[0] = 1;
  for (int q = 1; q <= n - 2; ++q) dims[q] = 0;
  dims[n - 1] = binom(d - 1, n);
  return dims;
}

namespace {

// dim H^q of the B-truncated Cech complex of O_X
uint64_t truncated_dim_at(const HomogeneousPoly& F, int q, int B,
                          const TruncationOptions& opts) {
  const int n = F.nvars() - 1;
  const int d = F.degree();
  FReducer red(F);  // validates the cover condition
  (void)red;

  // basis of F-reduced degree-0 monomials per index set, three adjacent levels
  std::map<int, std::vector<std::vector<Exponent>>> bases;  // level -> per-ordinal
  std::map<int, std::vector<CechIndex>> indices;
  uint64_t total = 0;
  for (int p : {q - 1, q, q + 1}) {
    if (p < 0 || p > n - 1) continue;
    indices[p] = CechIndex::all(n, p);
    auto& lv = bases[p];
    for (const CechIndex& S : indices[p]) {
      lv.push_back(detail::truncated_monomials(n, d, S.entries(), B, 0));
      total += lv.back().size();
      if (total > opts.max_basis) {
        throw ResourceLimitError("truncated_cohomology_dim: basis cap exceeded");
      }
    }
  }

  // rank of the inclusion-induced differential from level p to level p+1
  auto rank_delta = [&](int p) -> int64_t {
    if (p < 0 || p + 1 > n - 1) return 0;
    detail::RowIndex rows;
    const auto& target_indices = indices[p + 1];
    std::map<CechIndex, int> ordinal;
    for (size_t t = 0; t < target_indices.size(); ++t)
      ordinal[target_indices[t]] = static_cast<int>(t);
    // columns sorted by (monomial, source index) keeps elimination local
    std::vector<SparseCol> cols;
    std::vector<std::pair<Exponent, size_t>> order;
    std::vector<std::pair<CechIndex, Exponent>> flat;
    for (size_t s = 0; s < indices[p].size(); ++s) {
      for (const Exponent& a : bases[p][s]) {
        order.emplace_back(a, flat.size());
        flat.emplace_back(indices[p][s], a);
      }
    }
    std::sort(order.begin(), order.end());
    for (const auto& [a, fi] : order) {
      const CechIndex& S = flat[fi].first;
      SparseCol col;
      for (int t = 1; t <= S.n(); ++t) {
        if (S.contains(t)) continue;
        auto [T, pos] = S.insert(t);
        Rational sign((pos % 2 == 0) ? 1 : -1);
        col[rows.id(ordinal.at(T), a)] = sign;
      }
      if (!col.empty()) cols.push_back(std::move(col));
    }
    return rank_of(cols);
  };

  uint64_t dim_cq = 0;
  for (const auto& b : bases[q]) dim_cq += b.size();
  int64_t r_q = rank_delta(q);
  int64_t r_qm1 = rank_delta(q - 1);
  return dim_cq - static_cast<uint64_t>(r_q) - static_cast<uint64_t>(r_qm1);
}

}  // namespace

TruncatedDim truncated_cohomology_dim(const HomogeneousPoly& F, int q, int B,
                                      const TruncationOptions& opts) {
  const int n = F.nvars() - 1;
  if (q < 0 || q > n - 1) {
    throw std::invalid_argument("truncated_cohomology_dim: q out of range [0, n-1]");
  }
  if (B < 0) throw std::invalid_argument("truncated_cohomology_dim: negative bound");
  TruncatedDim out;
  out.dim = truncated_dim_at(F, q, B, opts);
  if (B >= 1) {
    uint64_t prev = truncated_dim_at(F, q, B - 1, opts);
    out.stabilized = prev == out.dim;
  }
  return out;
}

}  // namespace picard
