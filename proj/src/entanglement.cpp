// Entanglement diagnostics. Schmidt coefficients come from an SVD of the
// amplitude matrix reshaped across the cut.

#include "qlocc/entanglement.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "qlocc/protocols.hpp"

namespace qlocc {

Cut Cut::by_party(const SubsystemLayout& layout) {
  Cut cut;
  for (const Subsystem& s : layout.subsystems()) {
    (s.party == Party::A ? cut.alice : cut.bob).insert(s.label);
  }
  cut.validate(layout);
  return cut;
}

void Cut::validate(const SubsystemLayout& layout) const {
  if (alice.empty() || bob.empty()) {
    throw std::invalid_argument("Cut: both sides must be non-empty");
  }
  for (const std::string& l : alice) {
    if (bob.count(l) != 0) {
      throw std::invalid_argument("Cut: label \"" + l + "\" on both sides");
    }
    layout.position(l);
  }
  for (const std::string& l : bob) layout.position(l);
  if (alice.size() + bob.size() != layout.size()) {
    throw std::invalid_argument("Cut: sides must cover every label");
  }
}

SchmidtResult schmidt_decomposition(const StateVector& phi, const Cut& cut) {
  const SubsystemLayout& layout = phi.layout();
  cut.validate(layout);

  // Reorder so the Alice labels lead (keeping each side's relative order),
  // then reshape to a D_A x D_B matrix; singular values are the Schmidt
  // coefficients.
  std::vector<std::string> order;
  std::size_t dim_a = 1, dim_b = 1;
  for (const Subsystem& s : layout.subsystems()) {
    if (cut.alice.count(s.label) != 0) {
      order.push_back(s.label);
      dim_a *= static_cast<std::size_t>(s.dim);
    }
  }
  for (const Subsystem& s : layout.subsystems()) {
    if (cut.bob.count(s.label) != 0) {
      order.push_back(s.label);
      dim_b *= static_cast<std::size_t>(s.dim);
    }
  }
  const StateVector reordered = permute_subsystems(phi, order);

  Eigen::MatrixXcd m(static_cast<Eigen::Index>(dim_a),
                     static_cast<Eigen::Index>(dim_b));
  for (std::size_t r = 0; r < dim_a; ++r) {
    for (std::size_t c = 0; c < dim_b; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          reordered[r * dim_b + c];
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();

  SchmidtResult out;
  out.coefficients.assign(sv.data(), sv.data() + sv.size());
  out.rank = 0;
  for (double c : out.coefficients) {
    if (c > 1e-10) ++out.rank;
  }
  return out;
}

double entanglement_entropy(const StateVector& phi, const Cut& cut) {
  const SchmidtResult schmidt = schmidt_decomposition(phi, cut);
  double entropy = 0.0;
  for (double c : schmidt.coefficients) {
    const double p = c * c;
    if (p > 1e-300) entropy -= p * std::log2(p);
  }
  return entropy;
}

double log_negativity(const DensityMatrix& rho, const Cut& cut) {
  cut.validate(rho.layout());
  const Matrix pt = partial_transpose(rho, cut.bob);
  return std::max(0.0, std::log2(trace_norm(pt)));
}

double log_negativity(const StateVector& phi, const Cut& cut) {
  return log_negativity(density(phi), cut);
}

PptResult ppt_check(const DensityMatrix& rho, const Cut& cut) {
  cut.validate(rho.layout());
  const Matrix pt = partial_transpose(rho, cut.bob);
  const std::vector<double> eigs = hermitian_eigenvalues(pt);
  const double min_eig = eigs.front();
  return PptResult{min_eig >= -tol::psd, min_eig};
}

SmolinCheckResult smolin_decomposition_check(double tolerance) {
  const int d = 2;
  const DensityMatrix lhs = build_rho_s(d);

  // Right side: the same Bell index on the (A1, A2) pair and the (B1, B2)
  // pair — each term is product across Alice:Bob.
  SubsystemLayout alice_pair({{"A1", d, Party::A}, {"A2", d, Party::A}});
  SubsystemLayout bob_pair({{"B1", d, Party::B}, {"B2", d, Party::B}});
  const std::size_t n = 16;
  std::vector<cplx> accum(n * n, cplx{0.0, 0.0});
  for (int m = 0; m < d; ++m) {
    for (int nn = 0; nn < d; ++nn) {
      const auto amps = bell_amplitudes(BellIndex(d, m, nn));
      const StateVector left = StateVector::unnormalized(alice_pair, amps);
      const StateVector right = StateVector::unnormalized(bob_pair, amps);
      const StateVector term = tensor_product(left, right);
      for (std::size_t r = 0; r < n; ++r) {
        kernels::axpy_conj(0.25 * term[r], term.data(), accum.data() + r * n,
                           n);
      }
    }
  }
  DensityMatrix rhs(SubsystemLayout::concat(alice_pair, bob_pair),
                    std::move(accum));
  const std::vector<std::string> order{"A1", "B1", "A2", "B2"};
  const DensityMatrix rhs_paired = permute_subsystems(rhs, order);

  const double distance = frobenius_distance(lhs, rhs_paired);
  return SmolinCheckResult{distance <= tolerance, distance};
}

namespace {

CheckResult make_check(std::string name, int d, std::string params,
                       double violation, double tolerance) {
  CheckResult c;
  c.name = std::move(name);
  c.d = d;
  c.params = std::move(params);
  c.measured = violation;
  c.tolerance = tolerance;
  c.pass = violation <= tolerance;
  return c;
}

CheckResult make_info(std::string name, int d, std::string params,
                      double measured) {
  CheckResult c;
  c.name = std::move(name);
  c.d = d;
  c.params = std::move(params);
  c.measured = measured;
  c.tolerance = 0.0;
  c.pass = true;
  return c;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

NecessityReport necessity_report(int d, const StateVector& psi,
                                 const ToleranceSet& tols) {
  if (d != 2 && d != 3) {
    throw std::invalid_argument("necessity_report: d must be 2 or 3");
  }
  NecessityReport report{d, {}, "", false};

  const DensityMatrix rho = build_rho(d, psi);
  const DensityMatrix rho_s = build_rho_s(d);

  // (a) rho equals rho_s ox psi up to the fixed subsystem reordering.
  {
    SubsystemLayout psi_pair({{"A3", psi.layout().at(0).dim, Party::A},
                              {"B3", psi.layout().at(1).dim, Party::B}});
    const DensityMatrix factor =
        tensor_product(rho_s, density(psi.relabeled(std::move(psi_pair))));
    const std::vector<std::string> order{"A1", "B1", "A3",
                                         "B3", "A2", "B2"};
    const DensityMatrix reordered = permute_subsystems(factor, order);
    report.checks.push_back(make_check("necessity.factorization", d, "",
                                       frobenius_distance(rho, reordered),
                                       tols.construction));
  }

  // (b) rho_s is PPT across Alice:Bob.
  {
    const PptResult ppt = ppt_check(rho_s, Cut::by_party(rho_s.layout()));
    report.checks.push_back(make_check(
        "necessity.rho_s_ppt", d, "min_eig=" + format_double(ppt.min_eigenvalue),
        std::max(0.0, -ppt.min_eigenvalue), tols.psd));
  }

  // (c) E_N(rho) = E_N(psi): rho_s contributes nothing across the cut.
  const double en_rho = log_negativity(rho, Cut::by_party(rho.layout()));
  const double en_psi = log_negativity(psi, Cut::by_party(psi.layout()));
  report.checks.push_back(make_check(
      "necessity.log_negativity_chain", d,
      "EN_rho=" + format_double(en_rho) + ",EN_psi=" + format_double(en_psi),
      std::abs(en_rho - en_psi), tols.spectral));

  // (d) single-copy distillation yield, when psi can drive the protocol.
  const bool teleport_compatible =
      psi.layout().at(0).dim == d && psi.layout().at(1).dim == d;
  if (teleport_compatible) {
    const bool is_mes =
        fidelity_pure(bell_state(BellIndex(d, 0, 0)), psi) >=
        1.0 - tol::construction;
    double worst_fid = 1.0;
    double worst_entropy_dev = 0.0;
    const StateVector target = bell_state(BellIndex(d, 0, 0));
    for (int m = 0; m < d; ++m) {
      for (int n = 0; n < d; ++n) {
        const DistillResult res = distill_copy(d, BellIndex(d, m, n), psi);
        for (const DistillLeaf& leaf : res.leaves) {
          worst_fid = std::min(worst_fid, fidelity_pure(target, leaf.output));
          const double s = entanglement_entropy(
              leaf.output, Cut::by_party(leaf.output.layout()));
          worst_entropy_dev =
              std::max(worst_entropy_dev, std::abs(std::log2(d) - s));
        }
      }
    }
    if (is_mes) {
      report.checks.push_back(make_check("necessity.distill_fidelity", d,
                                         "psi=mes", 1.0 - worst_fid,
                                         tols.construction));
      report.checks.push_back(make_check("necessity.distill_entropy", d,
                                         "psi=mes", worst_entropy_dev,
                                         tols.construction));
    } else {
      report.checks.push_back(make_info(
          "necessity.distill_fidelity", d,
          "informational: non-MES resource, worst-case branch fidelity",
          worst_fid));
    }
  }

  // (e) Schmidt profile of psi against the necessity thresholds.
  const SchmidtResult schmidt =
      schmidt_decomposition(psi, Cut::by_party(psi.layout()));
  const double entropy = entanglement_entropy(psi, Cut::by_party(psi.layout()));
  const bool rank_ok = schmidt.rank >= d;
  const bool entropy_ok = entropy >= std::log2(d) - tols.spectral;
  report.consistent_with_bound = rank_ok && entropy_ok;
  report.verdict = report.consistent_with_bound
                       ? "consistent with necessity bound"
                       : "below necessity bound";
  report.checks.push_back(make_info(
      "necessity.resource_entropy", d,
      "rank=" + std::to_string(schmidt.rank) + ",threshold_rank=" +
          std::to_string(d) + ",threshold_entropy=" +
          format_double(std::log2(d)) + "," + report.verdict,
      entropy));

  return report;
}

}  // namespace qlocc
