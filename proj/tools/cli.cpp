#include "cli.hpp"

#include <chrono>
#include <sstream>
#include <vector>

#include "picard/errors.hpp"
#include "picard/parse.hpp"

namespace picard::cli {

namespace {

using nlohmann::ordered_json;

// fixed template echoing the generating cocycle of H^{n-1}(O_X)
constexpr const char* kGeneratorFormula = "(d0F)/(x1...xn)";

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::Check: return "check";
    case Mode::Cohomology: return "cohomology";
    case Mode::Obstruct: return "obstruct";
    case Mode::K3: return "k3";
    case Mode::Report: return "report";
  }
  return "?";
}

std::string yn(bool b) { return b ? "yes" : "no"; }

ordered_json hyp_json(const HypothesisReport& h) {
  ordered_json j;
  j["degree_ok"] = h.degree_ok;
  j["cover_ok"] = h.cover_ok;
  j["smooth_ok"] = h.smooth_ok;
  j["n_ok"] = h.n_ok;
  j["k3_mode"] = h.k3_mode;
  return j;
}

std::string hyp_text(const HypothesisReport& h) {
  std::ostringstream os;
  os << "hypotheses: degree_ok=" << yn(h.degree_ok) << " cover_ok=" << yn(h.cover_ok)
     << " smooth_ok=" << yn(h.smooth_ok) << " n_ok=" << yn(h.n_ok)
     << " k3_mode=" << yn(h.k3_mode);
  return os.str();
}

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

HomogeneousPoly parse_input_poly(const RunConfig& config) {
  if (config.poly_text.empty()) {
    throw InputError("this mode requires a polynomial (--poly or --poly-file)");
  }
  LaurentPoly p = parse_poly(config.poly_text, config.n);
  if (p.is_zero()) throw InputError("the zero polynomial defines no hypersurface");
  int d = p.terms().begin()->first.total_degree();
  if (!check_homogeneous(p, d)) {
    throw InputError("polynomial is not homogeneous with nonnegative exponents");
  }
  return HomogeneousPoly(std::move(p), d);
}

class ReportBuilder {
 public:
  explicit ReportBuilder(const RunConfig& config) : config_(config) {
    doc_["mode"] = mode_name(config.mode);
    line(std::string("mode: ") + mode_name(config.mode));
    if (config.n >= 0) line("n: " + std::to_string(config.n));
  }

  void line(const std::string& s) { lines_.push_back(s); }
  ordered_json& doc() { return doc_; }

  RunResult finish(int exit_code, std::chrono::steady_clock::time_point start) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    doc_["timings_ms"] = ordered_json{{"total", ms}};
    line("exit: " + std::to_string(exit_code));
    line("timings_ms: total=" + std::to_string(ms));
    RunResult res;
    res.exit_code = exit_code;
    res.doc = std::move(doc_);
    std::ostringstream os;
    for (const auto& l : lines_) os << l << '\n';
    res.text = os.str();
    return res;
  }

 private:
  const RunConfig& config_;
  ordered_json doc_;
  std::vector<std::string> lines_;
};

int run_check(const RunConfig& config, ReportBuilder& rb) {
  HomogeneousPoly F = parse_input_poly(config);
  rb.line("polynomial: " + F.poly().to_string());
  HypothesisReport hyp =
      check_hypotheses(F, config.n, {MonomialOrder::GrevLex, config.step_cap});
  rb.doc()["hypotheses"] = hyp_json(hyp);
  rb.line(hyp_text(hyp));
  rb.line(hyp.all_ok() ? "all hypotheses certified" : "hypothesis check failed");
  return hyp.all_ok() ? 0 : 1;
}

int run_cohomology(const RunConfig& config, ReportBuilder& rb) {
  HomogeneousPoly F = parse_input_poly(config);
  rb.line("polynomial: " + F.poly().to_string());
  HypothesisReport hyp =
      check_hypotheses(F, config.n, {MonomialOrder::GrevLex, config.step_cap});
  rb.doc()["hypotheses"] = hyp_json(hyp);
  rb.line(hyp_text(hyp));
  if (!hyp.all_ok()) {
    rb.line("hypothesis check failed; cohomology not computed");
    return 1;
  }
  const int n = config.n;
  const int d = F.degree();
  const int B = config.bound.value_or(d);
  auto dims = hypersurface_O_cohomology_dims(n, d);
  ordered_json jdims, jtrunc;
  bool all_ok = true;
  for (int q = 0; q <= n - 1; ++q) {
    jdims[std::to_string(q)] = dims.at(q);
    TruncatedDim t = truncated_cohomology_dim(F, q, B);
    jtrunc[std::to_string(q)] = ordered_json{{"dim", t.dim}, {"stabilized", t.stabilized}};
    bool ok = t.stabilized && t.dim == dims.at(q);
    all_ok = all_ok && ok;
    std::ostringstream os;
    os << "H^" << q << "(O_X) = " << dims.at(q) << " (closed form); truncated at B=" << B
       << ": " << t.dim << (t.stabilized ? " (stabilized)" : " (NOT stabilized)");
    rb.line(os.str());
  }
  rb.doc()["cohomology"] = ordered_json{{"dims", jdims}, {"truncated", jtrunc}, {"bound", B}};
  rb.line(all_ok ? "truncated computation confirms the closed forms"
                 : "truncated computation inconclusive");
  return all_ok ? 0 : 2;
}

int run_obstruct(const RunConfig& config, ReportBuilder& rb) {
  HomogeneousPoly F = parse_input_poly(config);
  rb.line("polynomial: " + F.poly().to_string());
  if (config.n == 3) {
    throw InputError("n = 3 is the K3 case; use --mode k3");
  }
  HypothesisReport hyp =
      check_hypotheses(F, config.n, {MonomialOrder::GrevLex, config.step_cap});
  rb.doc()["hypotheses"] = hyp_json(hyp);
  rb.line(hyp_text(hyp));
  if (!hyp.all_ok()) {
    rb.line("hypothesis check failed; obstruction not computed");
    return 1;
  }
  ObstructionCertificate cert = obstruction_certificate(F, config.m, hyp);
  bool blocked = cert.verdict == ClassVerdict::NonzeroClass;
  ordered_json jc;
  jc["m"] = cert.m;
  jc["functional_value"] = to_string(cert.functional_value);
  jc["verdict"] = to_string(cert.verdict);
  jc["does_not_extend"] = blocked;
  rb.doc()["obstruction"] = jc;
  rb.line(std::string("generator cocycle: ") + kGeneratorFormula);
  std::vector<int> full;
  for (int i = 1; i <= config.n; ++i) full.push_back(i);
  rb.line("paired top entry: " +
          cert.paired.entry(CechIndex(full, config.n)).to_string());
  rb.line("obstruction certificate (log pairing evaluated by the coefficient functional): m=" +
          std::to_string(cert.m) + " functional_value=" + to_string(cert.functional_value) +
          " verdict=" + to_string(cert.verdict));
  rb.line(blocked ? "O(m)|_X does not extend to any nontrivial deformation"
                  : "obstruction class vanishes for this twist");
  return 0;
}

int run_k3(const RunConfig& config, ReportBuilder& rb) {
  if (config.n != 3) throw InputError("k3 mode requires --n 3");
  HomogeneousPoly F = parse_input_poly(config);
  rb.line("polynomial: " + F.poly().to_string());
  if (F.degree() != 4) throw InputError("k3 mode requires a quartic");
  HypothesisReport hyp =
      check_hypotheses(F, config.n, {MonomialOrder::GrevLex, config.step_cap});
  rb.doc()["hypotheses"] = hyp_json(hyp);
  rb.line(hyp_text(hyp));
  if (!hyp.degree_ok || !hyp.cover_ok || !hyp.smooth_ok) {
    rb.line("hypothesis check failed; K3 computation skipped");
    return 1;
  }
  K3Result k3 = k3_kernel(F, config.bound.value_or(4));
  rb.doc()["k3"] =
      ordered_json{{"h1", k3.h1}, {"kernel", k3.kernel}, {"stabilized", k3.stabilized}};
  std::ostringstream os;
  os << "H^1(T_X) (truncated linear algebra at two bounds): " << k3.h1
     << (k3.stabilized ? " (stabilized)" : " (NOT stabilized)");
  rb.line(os.str());
  rb.line("pairing kernel against O(1)|_X (coefficient functional): " +
          std::to_string(k3.kernel));
  if (!k3.stabilized) {
    rb.line("inconclusive: dimensions did not stabilize; raise --bound");
    return 2;
  }
  rb.line("kernel = tangent space of the polarized moduli inside H^1(T_X)");
  return 0;
}

int run_report(const RunConfig& config, ReportBuilder& rb) {
  if (!config.assume_pic_z) {
    throw InputError("report mode requires --assume-pic-z (the Picard premise is external)");
  }
  Scenario sc = config.scenario;
  if (sc == Scenario::Auto) {
    sc = config.poly_text.empty() ? Scenario::Trivial : Scenario::Generator;
  }
  DeformationQuery query;
  query.n = config.n;
  query.assume_pic_z = true;
  query.groebner = {MonomialOrder::GrevLex, config.step_cap};
  switch (sc) {
    case Scenario::Trivial:
      query.scenario = DeformationScenario::TrivialExtension;
      query.twist = config.m;
      rb.line("scenario: trivial square-zero extension of P^n by O(" +
              std::to_string(config.m) + ")[-1]");
      break;
    case Scenario::Zero:
      query.scenario = DeformationScenario::ZeroDeformation;
      query.F = parse_input_poly(config);
      rb.line("scenario: hypersurface with zero deformation class");
      rb.line("polynomial: " + query.F->poly().to_string());
      break;
    default:
      query.scenario = DeformationScenario::GeneratorDeformation;
      query.F = parse_input_poly(config);
      rb.line("scenario: hypersurface with the generating deformation");
      rb.line("polynomial: " + query.F->poly().to_string());
      break;
  }
  PicReport rep = deformation_report(query);
  if (rep.hypotheses) {
    rb.doc()["hypotheses"] = hyp_json(*rep.hypotheses);
    rb.line(hyp_text(*rep.hypotheses));
  }
  if (rep.certificate) {
    const auto& cert = *rep.certificate;
    ordered_json jc;
    jc["m"] = cert.m;
    jc["functional_value"] = to_string(cert.functional_value);
    jc["verdict"] = to_string(cert.verdict);
    rb.doc()["obstruction"] = jc;
    rb.line(std::string("generator cocycle: ") + kGeneratorFormula);
    rb.line("obstruction certificate: m=" + std::to_string(cert.m) + " functional_value=" +
            to_string(cert.functional_value) + " verdict=" + to_string(cert.verdict));
  }
  rb.doc()["pic_conclusion"] = rep.conclusion;
  ordered_json prem = ordered_json::array();
  for (const auto& p : rep.premises) {
    prem.push_back(p);
    rb.line("premise: " + p);
  }
  rb.doc()["premises"] = prem;
  if (rep.premises_ok) {
    rb.line("conclusion: Pic = " + rep.conclusion);
    return 0;
  }
  rb.line("no conclusion: premises not certified");
  return 1;
}

}  // namespace

std::optional<Mode> mode_from_string(const std::string& s) {
  if (s == "check") return Mode::Check;
  if (s == "cohomology") return Mode::Cohomology;
  if (s == "obstruct") return Mode::Obstruct;
  if (s == "k3") return Mode::K3;
  if (s == "report") return Mode::Report;
  return std::nullopt;
}

std::optional<Scenario> scenario_from_string(const std::string& s) {
  if (s == "generator") return Scenario::Generator;
  if (s == "zero") return Scenario::Zero;
  if (s == "trivial") return Scenario::Trivial;
  return std::nullopt;
}

RunResult run(const RunConfig& config) {
  auto start = std::chrono::steady_clock::now();
  ReportBuilder rb(config);
  int code = 3;
  try {
    if (config.n < 1) throw InputError("--n must be at least 1");
    switch (config.mode) {
      case Mode::Check: code = run_check(config, rb); break;
      case Mode::Cohomology: code = run_cohomology(config, rb); break;
      case Mode::Obstruct: code = run_obstruct(config, rb); break;
      case Mode::K3: code = run_k3(config, rb); break;
      case Mode::Report: code = run_report(config, rb); break;
    }
  } catch (const ParseError& e) {
    rb.doc()["error"] = ordered_json{
        {"kind", "parse"}, {"message", e.what()}, {"offset", e.offset()}};
    rb.line(std::string("input error: ") + e.what());
    code = 3;
  } catch (const ResourceLimitError& e) {
    rb.doc()["error"] = ordered_json{{"kind", "resource-limit"}, {"message", e.what()}};
    rb.line(std::string("inconclusive (resource limit): ") + e.what());
    code = 2;
  } catch (const InputError& e) {
    rb.doc()["error"] = ordered_json{{"kind", "input"}, {"message", e.what()}};
    rb.line(std::string("input error: ") + e.what());
    code = 3;
  } catch (const std::invalid_argument& e) {
    rb.doc()["error"] = ordered_json{{"kind", "input"}, {"message", e.what()}};
    rb.line(std::string("input error: ") + e.what());
    code = 3;
  } catch (const std::exception& e) {
    rb.doc()["error"] = ordered_json{{"kind", "internal"}, {"message", e.what()}};
    rb.line(std::string("internal error (inconclusive): ") + e.what());
    code = 2;
  }
  return rb.finish(code, start);
}

std::string emit_report(const RunResult& result, OutputFormat format) {
  if (format == OutputFormat::Json) return result.doc.dump(2) + "\n";
  return result.text;
}

}  // namespace picard::cli
