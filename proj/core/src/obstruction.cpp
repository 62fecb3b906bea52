#include "picard/obstruction.hpp"

#include <sstream>
#include <stdexcept>

namespace picard {

void UnitMonomialCochain::set_entry(int i, int j, Unit u) {
  if (i < 1 || j <= i || j > n_) {
    throw std::invalid_argument("UnitMonomialCochain: need 1 <= i < j <= n");
  }
  if (u.coeff == 0) throw std::invalid_argument("UnitMonomialCochain: zero coefficient");
  if (u.exponent.nvars() != n_ + 1) {
    throw std::invalid_argument("UnitMonomialCochain: wrong variable count");
  }
  if (u.exponent.total_degree() != 0) {
    throw std::invalid_argument("UnitMonomialCochain: unit must have total degree 0");
  }
  for (int k = 0; k <= n_; ++k) {
    if (k != i && k != j && u.exponent[k] != 0) {
      throw std::invalid_argument("UnitMonomialCochain: exponent supported outside {i, j}");
    }
  }
  entries_.insert_or_assign({i, j}, std::move(u));
}

UnitMonomialCochain::Unit UnitMonomialCochain::entry(int i, int j) const {
  auto it = entries_.find({i, j});
  if (it != entries_.end()) return it->second;
  return Unit{Rational(1), Exponent(n_ + 1)};
}

bool UnitMonomialCochain::is_cocycle() const {
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      for (int k = j + 1; k <= n_; ++k) {
        Unit ij = entry(i, j), jk = entry(j, k), ik = entry(i, k);
        if (ik.exponent != ij.exponent + jk.exponent) return false;
        if (ik.coeff != ij.coeff * jk.coeff) return false;
      }
    }
  }
  return true;
}

UnitMonomialCochain operator*(const UnitMonomialCochain& a, const UnitMonomialCochain& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("UnitMonomialCochain product: size mismatch");
  UnitMonomialCochain out(a.n_);
  for (int i = 1; i <= a.n_; ++i) {
    for (int j = i + 1; j <= a.n_; ++j) {
      auto ua = a.entry(i, j), ub = b.entry(i, j);
      out.set_entry(i, j, {ua.coeff * ub.coeff, ua.exponent + ub.exponent});
    }
  }
  return out;
}

UnitMonomialCochain line_bundle_cocycle(long m, int n) {
  UnitMonomialCochain out(n);
  if (m == 0) return out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Exponent a(n + 1);
      // alpha_ij = (x_j / x_i)^{-m}
      a[i] = static_cast<int>(m);
      a[j] = static_cast<int>(-m);
      out.set_entry(i, j, {Rational(1), a});
    }
  }
  return out;
}

FunctionCochain log_pairing(const VectorFieldCochain& v, const UnitMonomialCochain& u,
                            const FReducer& red) {
  const int n = v.n();
  if (u.n() != n) throw std::invalid_argument("log_pairing: cover size mismatch");
  if (!u.is_cocycle()) throw std::invalid_argument("log_pairing: u is not a cocycle");
  const int p = v.degree();
  FunctionCochain out(n, p + 1);
  Rational outer_sign((p % 2 == 0) ? 1 : -1);
  for (const CechIndex& T : CechIndex::all(n, p + 1)) {
    const auto& te = T.entries();
    std::vector<int> head(te.begin(), te.end() - 1);
    auto it = v.entries().find(CechIndex(std::move(head), n));
    if (it == v.entries().end()) continue;
    const std::vector<LaurentPoly>& g = it->second;
    UnitMonomialCochain::Unit unit = u.entry(te[te.size() - 2], te[te.size() - 1]);
    // D(x^a)/x^a = sum_j a_j g_j / x_j for D = sum_j g_j d_j
    LaurentPoly sum(n + 1);
    for (int j = 0; j <= n; ++j) {
      int aj = unit.exponent[j];
      if (aj == 0 || g[static_cast<size_t>(j)].is_zero()) continue;
      Exponent inv(n + 1);
      inv[j] = -1;
      sum += LaurentPoly::monomial(inv, Rational(aj)) * g[static_cast<size_t>(j)];
    }
    if (sum.is_zero()) continue;
    out.set_entry(T, red.reduce(outer_sign * sum));
  }
  return out;
}

std::string to_string(ClassVerdict v) {
  switch (v) {
    case ClassVerdict::NonzeroClass:
      return "nonzero-class";
    case ClassVerdict::ZeroClass:
      return "zero-class";
    case ClassVerdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

ObstructionCertificate obstruction_certificate(const HomogeneousPoly& F, long m,
                                               const HypothesisReport& hyp) {
  const int n = F.nvars() - 1;
  if (!hyp.all_ok() || hyp.k3_mode || n < 4) {
    throw std::invalid_argument(
        "obstruction_certificate: hypotheses not certified for n >= 4");
  }
  // The functional decides classes in H^{n-1}(O_X) because that group is
  // one-dimensional for deg F = n+1.
  if (hypersurface_O_cohomology_dims(n, F.degree()).at(n - 1) != 1) {
    throw std::logic_error("obstruction_certificate: H^{n-1}(O_X) is not a line");
  }
  FReducer red(F);
  VectorFieldCochain gen = lemma_generator(F);

  auto value_for = [&](long twist) {
    FunctionCochain paired = log_pairing(gen, line_bundle_cocycle(twist, n), red);
    return std::make_pair(paired, top_coefficient_functional(paired, red));
  };

  auto [paired, value] = value_for(m);
  auto [paired_ref, ref] = value_for(-1);
  if (value != Rational(-m) * ref) {
    throw std::logic_error("obstruction_certificate: bilinearity check failed");
  }

  ObstructionCertificate cert{m, paired, value, ClassVerdict::ZeroClass};
  if (value != 0) cert.verdict = ClassVerdict::NonzeroClass;
  return cert;
}

K3Result k3_kernel(const HomogeneousPoly& F, int B, const TruncationOptions& opts) {
  const int n = F.nvars() - 1;
  if (n != 3 || F.degree() != 4) {
    throw std::invalid_argument("k3_kernel: requires a quartic surface in P^3");
  }
  HypothesisReport hyp = check_hypotheses(F, n);
  if (!hyp.degree_ok || !hyp.cover_ok || !hyp.smooth_ok) {
    throw std::invalid_argument("k3_kernel: hypotheses fail");
  }
  TruncatedTangentBasis basis = truncated_h_tangent_basis(F, 1, B, opts);
  K3Result out;
  out.h1 = basis.dim;
  out.stabilized = basis.stabilized;

  FReducer red(F);
  UnitMonomialCochain o1 = line_bundle_cocycle(1, n);
  uint64_t rank = 0;
  for (const VectorFieldCochain& z : basis.representatives) {
    Rational value = top_coefficient_functional(log_pairing(z, o1, red), red);
    if (value != 0) {
      rank = 1;  // the target H^2(O_X) is a line; one nonzero value is full rank
      break;
    }
  }
  out.kernel = out.h1 - rank;
  return out;
}

namespace {

std::string pic_string(uint64_t k_dim) {
  if (k_dim == 0) return "Z";
  std::ostringstream os;
  os << "Z (+) k^" << k_dim;
  return os.str();
}

}  // namespace

PicReport deformation_report(const DeformationQuery& query) {
  PicReport rep;
  rep.scenario = query.scenario;
  rep.n = query.n;
  rep.assumed_pic_tx = query.assume_pic_z ? "Z" : "";

  if (query.scenario == DeformationScenario::TrivialExtension) {
    // P^n extended by O(k)[-1]: the sequence splits, delta = 0, and the
    // k-summand is H^2(P^n, O(k)).
    if (query.n < 1) {
      rep.premises.push_back("invalid: n must be >= 1");
      return rep;
    }
    if (!query.assume_pic_z) {
      rep.premises.push_back("not certified: Pic(P^n) = Z premise must be asserted");
      return rep;
    }
    uint64_t dim = pn_cohomology_dim(query.n, query.twist, 2);
    rep.dim_h_nminus2 = dim;
    rep.delta_verdict = "zero";
    rep.premises.push_back("Pic(P^n) = Z (assumed)");
    rep.premises.push_back("trivial square-zero extension: the deformation sequence splits");
    rep.premises.push_back("dim H^2(P^n, O(" + std::to_string(query.twist) +
                           ")) = " + std::to_string(dim) + " (closed form)");
    rep.premises_ok = true;
    rep.conclusion = pic_string(dim);
    return rep;
  }

  if (!query.F.has_value()) {
    rep.premises.push_back("invalid: hypersurface scenario without a polynomial");
    return rep;
  }
  const HomogeneousPoly& F = *query.F;
  const int n = F.nvars() - 1;
  rep.n = n;

  HypothesisReport hyp = check_hypotheses(F, n, query.groebner);
  rep.hypotheses = hyp;
  if (!hyp.all_ok() || hyp.k3_mode) {
    rep.premises.push_back("not certified: hypotheses fail or n < 4");
    rep.delta_verdict = "not-certified";
    return rep;
  }
  if (!query.assume_pic_z) {
    rep.premises.push_back("not certified: Pic(tX) = Z premise must be asserted");
    rep.delta_verdict = "not-certified";
    return rep;
  }
  auto dims = hypersurface_O_cohomology_dims(n, F.degree());
  rep.dim_h_nminus2 = dims.at(n - 2);
  rep.dim_h_nminus1 = dims.at(n - 1);
  rep.premises.push_back("hypotheses certified: degree, cover, smoothness (Groebner)");
  rep.premises.push_back("Pic(tX) = Z generated by O(1)|_X (assumed: Grothendieck-Lefschetz)");
  rep.premises.push_back("dim H^" + std::to_string(n - 2) + "(O_X) = " +
                         std::to_string(rep.dim_h_nminus2) + ", dim H^" +
                         std::to_string(n - 1) + "(O_X) = " +
                         std::to_string(rep.dim_h_nminus1) + " (closed form)");

  if (query.scenario == DeformationScenario::ZeroDeformation) {
    rep.delta_verdict = "zero";
    rep.premises.push_back("zero deformation class: the sequence splits, delta = 0");
    rep.premises_ok = true;
    rep.conclusion = pic_string(rep.dim_h_nminus2);
    return rep;
  }

  // generator deformation: delta[O(m)] = -m * value(-1), so a nonzero value
  // plus torsion-freeness of Q makes delta injective on Z
  ObstructionCertificate cert = obstruction_certificate(F, -1, hyp);
  rep.certificate = cert;
  if (cert.verdict != ClassVerdict::NonzeroClass) {
    rep.premises.push_back("not certified: obstruction functional vanished for m = -1");
    rep.delta_verdict = "not-certified";
    return rep;
  }
  rep.delta_verdict = "injective";
  rep.premises.push_back("obstruction functional value at m = -1: " +
                         to_string(cert.functional_value) + " (nonzero)");
  rep.premises.push_back(
      "delta[O(m)] = -m * value(-1) (Z-bilinearity), and Q is torsion-free: delta injective");
  if (rep.dim_h_nminus2 != 0) {
    rep.premises.push_back("not certified: H^{n-2}(O_X) unexpectedly nonzero");
    return rep;
  }
  rep.premises.push_back("H^{n-2}(O_X) = 0: Pic(X') injects into ker(delta) = 0");
  rep.premises_ok = true;
  rep.conclusion = "0";
  return rep;
}

}  // namespace picard
