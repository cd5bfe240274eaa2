// Constructions of the canonical MES basis, Weyl operators, resource states,
// and the rho / rho_s mixtures.

#include "qlocc/states.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qlocc/io.hpp"

namespace qlocc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// w^k for w = exp(+2 pi i / d); exponent reduced mod d first so the phase
// table is exact for repeated indices.
cplx omega_pow(int d, long long k) {
  const long long r = ((k % d) + d) % d;
  const double angle = kTwoPi * static_cast<double>(r) / static_cast<double>(d);
  return cplx{std::cos(angle), std::sin(angle)};
}

SubsystemLayout pair_layout(int d, const std::string& label_a,
                            const std::string& label_b) {
  return SubsystemLayout({{label_a, d, Party::A}, {label_b, d, Party::B}});
}

// psi must be a two-subsystem pure state ordered (party A, party B).
void check_bipartite(const StateVector& psi, const char* who) {
  const SubsystemLayout& l = psi.layout();
  if (l.size() != 2 || l.at(0).party != Party::A ||
      l.at(1).party != Party::B) {
    throw std::invalid_argument(
        std::string(who) +
        ": state must be bipartite with subsystems ordered (A, B)");
  }
}

}  // namespace

BellIndex::BellIndex(int d_, int m_, int n_) : d(d_), m(m_), n(n_) {
  if (d < 2) throw std::invalid_argument("BellIndex: d must be >= 2");
  if (m < 0 || m >= d || n < 0 || n >= d) {
    throw std::invalid_argument("BellIndex: require 0 <= m, n < d");
  }
}

std::vector<cplx> bell_amplitudes(const BellIndex& idx) {
  const int d = idx.d;
  std::vector<cplx> amps(static_cast<std::size_t>(d) * d, cplx{0.0, 0.0});
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    const int col = (j + idx.m) % d;
    amps[static_cast<std::size_t>(j) * d + col] =
        scale * omega_pow(d, static_cast<long long>(j) * idx.n);
  }
  return amps;
}

StateVector bell_state(const BellIndex& idx, const std::string& label_a,
                       const std::string& label_b) {
  return StateVector(pair_layout(idx.d, label_a, label_b),
                     bell_amplitudes(idx));
}

Matrix weyl_operator(const BellIndex& idx) {
  const int d = idx.d;
  Matrix u(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    u.at(static_cast<std::size_t>((j + idx.m) % d),
         static_cast<std::size_t>(j)) =
        omega_pow(d, static_cast<long long>(j) * idx.n);
  }
  return u;
}

std::vector<StateVector> bell_basis(int d) {
  if (d < 2) throw std::invalid_argument("bell_basis: d must be >= 2");
  std::vector<StateVector> out;
  out.reserve(static_cast<std::size_t>(d) * d);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      out.push_back(bell_state(BellIndex(d, m, n)));
    }
  }
  return out;
}

StateVector conjugate_state(const StateVector& phi) {
  std::vector<cplx> amps(phi.amplitudes().begin(), phi.amplitudes().end());
  for (cplx& a : amps) a = std::conj(a);
  return StateVector::unnormalized(phi.layout(), std::move(amps));
}

ResourceSpec parse_resource(const std::string& text, int default_d) {
  if (text == "mes") {
    return ResourceSpec{ResourceSpec::Mes{default_d}};
  }
  if (text.rfind("schmidt:", 0) == 0) {
    std::vector<double> coeffs;
    std::string rest = text.substr(8);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const std::size_t comma = rest.find(',', pos);
      const std::string item =
          rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
      std::size_t used = 0;
      double v;
      try {
        v = std::stod(item, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("invalid Schmidt coefficient \"" + item +
                                    "\"");
      }
      if (used != item.size()) {
        throw std::invalid_argument("invalid Schmidt coefficient \"" + item +
                                    "\"");
      }
      coeffs.push_back(v);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return ResourceSpec{ResourceSpec::Schmidt{std::move(coeffs)}};
  }
  if (text.rfind("file:", 0) == 0) {
    return ResourceSpec{ResourceSpec::File{text.substr(5)}};
  }
  throw std::invalid_argument(
      "resource must be \"mes\", \"schmidt:c0,c1,...\" or \"file:PATH\"");
}

StateVector resource_state(const ResourceSpec& spec, const std::string& label_a,
                           const std::string& label_b) {
  if (const auto* mes = std::get_if<ResourceSpec::Mes>(&spec.value)) {
    return bell_state(BellIndex(mes->d, 0, 0), label_a, label_b);
  }
  if (const auto* schmidt = std::get_if<ResourceSpec::Schmidt>(&spec.value)) {
    const std::vector<double>& c = schmidt->coefficients;
    if (c.empty()) {
      throw std::invalid_argument("Schmidt coefficient list is empty");
    }
    double sq = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] < 0.0) {
        throw std::invalid_argument("Schmidt coefficients must be >= 0");
      }
      if (k > 0 && c[k] > c[k - 1]) {
        throw std::invalid_argument(
            "Schmidt coefficients must be sorted descending");
      }
      sq += c[k] * c[k];
    }
    if (std::abs(sq - 1.0) > tol::construction) {
      throw std::invalid_argument(
          "Schmidt coefficients must have squared sum 1");
    }
    const int d = static_cast<int>(std::max<std::size_t>(c.size(), 2));
    std::vector<cplx> amps(static_cast<std::size_t>(d) * d, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < c.size(); ++k) {
      amps[k * static_cast<std::size_t>(d) + k] = cplx{c[k], 0.0};
    }
    return StateVector(pair_layout(d, label_a, label_b), std::move(amps));
  }
  const auto& file = std::get<ResourceSpec::File>(spec.value);
  auto loaded = io::read_state_file(file.path);
  if (!std::holds_alternative<StateVector>(loaded)) {
    throw std::invalid_argument("resource file \"" + file.path +
                                "\" must hold a pure state");
  }
  StateVector psi = std::get<StateVector>(std::move(loaded));
  check_bipartite(psi, "resource_state");
  SubsystemLayout relabel({{label_a, psi.layout().at(0).dim, Party::A},
                           {label_b, psi.layout().at(1).dim, Party::B}});
  return psi.relabeled(std::move(relabel));
}

namespace {

DensityMatrix mixture_of(SubsystemLayout layout,
                         const std::vector<StateVector>& states,
                         double weight) {
  const std::size_t n = layout.total_dim();
  std::vector<cplx> out(n * n, cplx{0.0, 0.0});
  for (const StateVector& v : states) {
    for (std::size_t r = 0; r < n; ++r) {
      kernels::axpy_conj(weight * v[r], v.data(), out.data() + r * n, n);
    }
  }
  return DensityMatrix(std::move(layout), std::move(out));
}

}  // namespace

DensityMatrix build_rho(int d, const StateVector& psi) {
  if (d < 2) throw std::invalid_argument("build_rho: d must be >= 2");
  check_bipartite(psi, "build_rho");
  SubsystemLayout psi_layout({{"A2", psi.layout().at(0).dim, Party::A},
                              {"B2", psi.layout().at(1).dim, Party::B}});
  const StateVector psi2 = psi.relabeled(std::move(psi_layout));

  std::vector<StateVector> terms;
  terms.reserve(static_cast<std::size_t>(d) * d);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      const BellIndex idx(d, m, n);
      StateVector flag1 = bell_state(idx, "A1", "B1");
      StateVector flag3 = bell_state(BellIndex(d, m, idx.neg_n()), "A3", "B3");
      terms.push_back(
          tensor_product(tensor_product(flag1, psi2), flag3));
    }
  }
  return mixture_of(terms.front().layout(), terms,
                    1.0 / (static_cast<double>(d) * d));
}

DensityMatrix build_rho_s(int d) {
  if (d < 2) throw std::invalid_argument("build_rho_s: d must be >= 2");
  std::vector<StateVector> terms;
  terms.reserve(static_cast<std::size_t>(d) * d);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      const BellIndex idx(d, m, n);
      StateVector flag1 = bell_state(idx, "A1", "B1");
      StateVector flag2 = bell_state(BellIndex(d, m, idx.neg_n()), "A2", "B2");
      terms.push_back(tensor_product(flag1, flag2));
    }
  }
  return mixture_of(terms.front().layout(), terms,
                    1.0 / (static_cast<double>(d) * d));
}

StateVector haar_random_state(const std::vector<int>& dims,
                              std::uint64_t seed) {
  if (dims.empty()) {
    throw std::invalid_argument("haar_random_state: dims must be non-empty");
  }
  std::vector<Subsystem> subs;
  subs.reserve(dims.size());
  for (std::size_t k = 0; k < dims.size(); ++k) {
    subs.push_back({"q" + std::to_string(k), dims[k], Party::A});
  }
  SubsystemLayout layout(std::move(subs));

  // Box-Muller over raw mt19937_64 draws keeps the stream portable across
  // standard libraries; std::normal_distribution is not.
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
  };
  std::vector<cplx> amps(layout.total_dim());
  for (cplx& a : amps) {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    a = cplx{r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2)};
  }
  return StateVector::unnormalized(std::move(layout), std::move(amps))
      .normalized();
}

}  // namespace qlocc
