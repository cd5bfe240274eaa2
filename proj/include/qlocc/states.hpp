// states.hpp
// The canonical maximally entangled basis |phi_{m,n}> = (1/sqrt d) sum_j
// w^{jn} |j>|j+m mod d> with w = exp(+2 pi i / d), the Weyl shift/phase
// operators behind it, and the rho / rho_s mixtures built from that basis.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qlocc/tensor.hpp"

namespace qlocc {

/// Index (m, n) into the canonical MES basis of C^d x C^d.
struct BellIndex {
  int d;
  int m;
  int n;

  BellIndex(int d_, int m_, int n_);

  /// The "-n" convention: (d - n) mod d; the identity on n when d = 2.
  int neg_n() const { return (d - n) % d; }

  /// Position in (m, n)-lexicographic order.
  int lex() const { return m * d + n; }

  bool operator==(const BellIndex&) const = default;
};

/// Raw amplitudes of |phi_{m,n}> in the composite basis (first factor most
/// significant). Exposed so callers can place the Bell pattern on subsystems
/// with non-default labels or parties.
std::vector<cplx> bell_amplitudes(const BellIndex& idx);

/// |phi_{m,n}> on two subsystems (label_a, d, party A), (label_b, d, party B).
StateVector bell_state(const BellIndex& idx, const std::string& label_a = "A",
                       const std::string& label_b = "B");

/// U_{m,n}|j> = w^{jn} |j+m mod d>, i.e. X^m Z^n (shift after phase).
/// Satisfies bell_state(d,m,n) = (I ox U_{m,n}) bell_state(d,0,0).
Matrix weyl_operator(const BellIndex& idx);

/// All d^2 Bell states in (m, n)-lexicographic order.
std::vector<StateVector> bell_basis(int d);

/// Componentwise complex conjugate in the computational basis. Maps
/// |phi_{m,n}> to |phi_{m,(d-n) mod d}>.
StateVector conjugate_state(const StateVector& phi);

/// Recipe for the shared resource psi.
///  - Mes{d}: bell_state(d, 0, 0).
///  - Schmidt{c}: sum_k c_k |k>|k> on dims (max(len,2), max(len,2)); short
///    coefficient lists are zero-padded so e.g. Schmidt{1} is |00> on qubits.
///    Coefficients must be nonnegative, descending, with sum c^2 = 1.
///  - File{path}: JSON state file, must be a bipartite A/B pure state.
struct ResourceSpec {
  struct Mes {
    int d;
  };
  struct Schmidt {
    std::vector<double> coefficients;
  };
  struct File {
    std::string path;
  };
  std::variant<Mes, Schmidt, File> value;
};

/// Parse "mes", "schmidt:c0,c1,..." or "file:PATH". `default_d` supplies the
/// dimension for "mes".
ResourceSpec parse_resource(const std::string& text, int default_d);

StateVector resource_state(const ResourceSpec& spec,
                           const std::string& label_a = "A",
                           const std::string& label_b = "B");

/// Eq.-style six-party mixture: rho = (1/d^2) sum_{m,n}
/// |phi_{m,n}><phi_{m,n}|_{A1B1} ox |psi><psi|_{A2B2} ox
/// |phi_{m,-n}><phi_{m,-n}|_{A3B3}. psi must be bipartite with one A and one
/// B subsystem; it is relabeled to (A2, B2).
DensityMatrix build_rho(int d, const StateVector& psi);

/// Four-party flag mixture rho_s = (1/d^2) sum_{m,n}
/// |phi_{m,n}><phi_{m,n}|_{A1B1} ox |phi_{m,-n}><phi_{m,-n}|_{A2B2}.
/// At d = 2 this is the Smolin state.
DensityMatrix build_rho_s(int d);

/// Deterministic Haar-distributed pure state: a complex-Gaussian vector from
/// mt19937_64(seed) via Box-Muller, normalized. Labels q0, q1, ...; party A.
StateVector haar_random_state(const std::vector<int>& dims,
                              std::uint64_t seed);

}  // namespace qlocc
