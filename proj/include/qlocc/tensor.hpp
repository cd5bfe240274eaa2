// tensor.hpp
// Dense complex tensor algebra over multi-qudit systems. The composite basis
// index of a layout (s_0, ..., s_{k-1}) with dims (d_0, ..., d_{k-1}) is
//   index = sum_k i_k * prod_{l>k} d_l
// i.e. the first subsystem is the most significant digit. Every operation in
// this module is a pure function; all values are immutable after construction.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qlocc/kernels.hpp"

namespace qlocc {

// Tolerance ladder: construction identities at 1e-12, PSD verdicts at 1e-10,
// spectral identities at 1e-9 (roundoff headroom for the larger eigensolves).
namespace tol {
inline constexpr double construction = 1e-12;
inline constexpr double psd = 1e-10;
inline constexpr double spectral = 1e-9;
inline constexpr double branch_prune = 1e-14;
}  // namespace tol

enum class Party : std::uint8_t { A, B };

std::string_view party_name(Party p);
Party parse_party(std::string_view s);

struct Subsystem {
  std::string label;
  int dim;
  Party party;
};

/// Ordered list of subsystems defining tensor index order and the A/B split.
class SubsystemLayout {
 public:
  SubsystemLayout() = default;
  explicit SubsystemLayout(std::vector<Subsystem> subsystems);

  std::size_t size() const { return subs_.size(); }
  std::size_t total_dim() const { return total_; }
  const Subsystem& at(std::size_t k) const { return subs_[k]; }
  std::span<const Subsystem> subsystems() const { return subs_; }

  bool has(std::string_view label) const;
  std::size_t position(std::string_view label) const;  // throws if absent
  std::vector<std::string> labels() const;
  std::vector<std::string> labels_of(Party p) const;

  std::size_t stride(std::size_t k) const { return strides_[k]; }

  void unpack(std::size_t flat, std::span<int> digits) const;
  std::size_t pack(std::span<const int> digits) const;

  bool operator==(const SubsystemLayout& other) const;

  // Concatenation for tensor products; labels must be disjoint.
  static SubsystemLayout concat(const SubsystemLayout& a,
                                const SubsystemLayout& b);

 private:
  std::vector<Subsystem> subs_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 1;
};

/// Pure multi-qudit state. Unit norm within 1e-12 unless built through
/// unnormalized(), which is reserved for explicit intermediates.
class StateVector {
 public:
  StateVector(SubsystemLayout layout, std::vector<cplx> amplitudes);
  static StateVector unnormalized(SubsystemLayout layout,
                                  std::vector<cplx> amplitudes);

  const SubsystemLayout& layout() const { return layout_; }
  std::span<const cplx> amplitudes() const { return amps_; }
  const cplx* data() const { return amps_.data(); }
  std::size_t dim() const { return amps_.size(); }
  cplx operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;
  StateVector normalized() const;  // throws on zero norm

  // Same dims in the same order, different labels/parties.
  StateVector relabeled(SubsystemLayout layout) const;

 private:
  StateVector() = default;
  SubsystemLayout layout_;
  std::vector<cplx> amps_;
};

/// Mixed state: Hermitian within 1e-12, unit trace within 1e-12. Positive
/// semidefiniteness (min eigenvalue >= -1e-10) is guaranteed by every
/// construction path in this library (convex mixtures of pure states) and is
/// asserted where operations depend on it, not re-solved at each construction.
class DensityMatrix {
 public:
  DensityMatrix(SubsystemLayout layout, std::vector<cplx> entries);

  const SubsystemLayout& layout() const { return layout_; }
  std::span<const cplx> entries() const { return entries_; }
  const cplx* data() const { return entries_.data(); }
  std::size_t dim() const { return layout_.total_dim(); }
  cplx entry(std::size_t r, std::size_t c) const {
    return entries_[r * dim() + c];
  }

  cplx trace() const;
  double purity() const;  // tr(rho^2); Frobenius norm squared for Hermitian

  DensityMatrix relabeled(SubsystemLayout layout) const;

 private:
  SubsystemLayout layout_;
  std::vector<cplx> entries_;
};

/// Square complex operator without subsystem structure (unitaries, partial
/// transposes, projector sums). Row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), e_(n * n) {}
  Matrix(std::size_t n, std::vector<cplx> entries);

  static Matrix identity(std::size_t n);

  std::size_t dim() const { return n_; }
  std::span<const cplx> entries() const { return e_; }
  const cplx* data() const { return e_.data(); }
  cplx operator()(std::size_t r, std::size_t c) const { return e_[r * n_ + c]; }
  cplx& at(std::size_t r, std::size_t c) { return e_[r * n_ + c]; }

  cplx trace() const;
  Matrix adjoint() const;
  Matrix operator*(const Matrix& rhs) const;
  std::vector<cplx> apply(std::span<const cplx> v) const;

  double hermiticity_deviation() const;  // max |M - M^dag| entrywise

 private:
  std::size_t n_ = 0;
  std::vector<cplx> e_;
};

double frobenius_distance(const Matrix& a, const Matrix& b);
double frobenius_distance(const DensityMatrix& a, const DensityMatrix& b);

// --- Operations ---------------------------------------------------------

StateVector tensor_product(const StateVector& a, const StateVector& b);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

StateVector permute_subsystems(const StateVector& x,
                               std::span<const std::string> order);
DensityMatrix permute_subsystems(const DensityMatrix& x,
                                 std::span<const std::string> order);

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::set<std::string>& keep);

/// Transpose the indices of one party (or an explicit label set). The result
/// stays Hermitian but need not be positive, hence a plain Matrix.
Matrix partial_transpose(const DensityMatrix& rho, Party party);
Matrix partial_transpose(const DensityMatrix& rho,
                         const std::set<std::string>& transposed);

/// Ascending eigenvalues of a Hermitian matrix. Symmetrizes (M + M^dag)/2
/// before solving; throws if the Hermiticity deviation exceeds 1e-10.
std::vector<double> hermitian_eigenvalues(const Matrix& m);

double trace_norm(const Matrix& m);  // sum of |eigenvalues|, Hermitian input

double fidelity_pure(const StateVector& phi, const StateVector& chi);
double fidelity_pure(const StateVector& phi, const DensityMatrix& rho);

DensityMatrix density(const StateVector& phi);  // |phi><phi|

StateVector apply_local_unitary(const StateVector& x, std::string_view label,
                                const Matrix& u);

/// Contract <bra| against the named subsystems of `state` (k-th label pairs
/// with the k-th subsystem of `bra`). Result is the unnormalized state on the
/// remaining subsystems, in their original order.
StateVector partial_inner_product(const StateVector& state,
                                  const StateVector& bra,
                                  std::span<const std::string> labels);

StateVector basis_state(SubsystemLayout layout, std::span<const int> digits);

}  // namespace qlocc
