// Dense tensor algebra over subsystem layouts. Index arithmetic is the only
// subtle part: everything routes through pack/unpack against the documented
// first-subsystem-most-significant convention.

#include "qlocc/tensor.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace qlocc {

namespace {

void check_finite(std::span<const cplx> values, const char* what) {
  for (const cplx& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument(std::string(what) +
                                  ": non-finite entry rejected");
    }
  }
}

}  // namespace

std::string_view party_name(Party p) { return p == Party::A ? "A" : "B"; }

Party parse_party(std::string_view s) {
  if (s == "A") return Party::A;
  if (s == "B") return Party::B;
  throw std::invalid_argument("party must be \"A\" or \"B\", got \"" +
                              std::string(s) + "\"");
}

// --- SubsystemLayout ------------------------------------------------------

SubsystemLayout::SubsystemLayout(std::vector<Subsystem> subsystems)
    : subs_(std::move(subsystems)) {
  std::unordered_set<std::string> seen;
  for (const Subsystem& s : subs_) {
    if (s.label.empty()) {
      throw std::invalid_argument("subsystem label must be non-empty");
    }
    if (s.dim < 2) {
      throw std::invalid_argument("subsystem \"" + s.label +
                                  "\" has dim < 2");
    }
    if (!seen.insert(s.label).second) {
      throw std::invalid_argument("duplicate subsystem label \"" + s.label +
                                  "\"");
    }
  }
  strides_.assign(subs_.size(), 1);
  total_ = 1;
  for (std::size_t k = subs_.size(); k-- > 0;) {
    strides_[k] = total_;
    total_ *= static_cast<std::size_t>(subs_[k].dim);
  }
}

bool SubsystemLayout::has(std::string_view label) const {
  for (const Subsystem& s : subs_) {
    if (s.label == label) return true;
  }
  return false;
}

std::size_t SubsystemLayout::position(std::string_view label) const {
  for (std::size_t k = 0; k < subs_.size(); ++k) {
    if (subs_[k].label == label) return k;
  }
  throw std::invalid_argument("no subsystem labeled \"" + std::string(label) +
                              "\"");
}

std::vector<std::string> SubsystemLayout::labels() const {
  std::vector<std::string> out;
  out.reserve(subs_.size());
  for (const Subsystem& s : subs_) out.push_back(s.label);
  return out;
}

std::vector<std::string> SubsystemLayout::labels_of(Party p) const {
  std::vector<std::string> out;
  for (const Subsystem& s : subs_) {
    if (s.party == p) out.push_back(s.label);
  }
  return out;
}

void SubsystemLayout::unpack(std::size_t flat, std::span<int> digits) const {
  for (std::size_t k = 0; k < subs_.size(); ++k) {
    digits[k] = static_cast<int>(flat / strides_[k]);
    flat %= strides_[k];
  }
}

std::size_t SubsystemLayout::pack(std::span<const int> digits) const {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < subs_.size(); ++k) {
    flat += static_cast<std::size_t>(digits[k]) * strides_[k];
  }
  return flat;
}

bool SubsystemLayout::operator==(const SubsystemLayout& other) const {
  if (subs_.size() != other.subs_.size()) return false;
  for (std::size_t k = 0; k < subs_.size(); ++k) {
    if (subs_[k].label != other.subs_[k].label ||
        subs_[k].dim != other.subs_[k].dim ||
        subs_[k].party != other.subs_[k].party) {
      return false;
    }
  }
  return true;
}

SubsystemLayout SubsystemLayout::concat(const SubsystemLayout& a,
                                        const SubsystemLayout& b) {
  std::vector<Subsystem> subs(a.subs_);
  for (const Subsystem& s : b.subs_) {
    if (a.has(s.label)) {
      throw std::invalid_argument("label collision on \"" + s.label +
                                  "\" in tensor product");
    }
    subs.push_back(s);
  }
  return SubsystemLayout(std::move(subs));
}

// --- StateVector ----------------------------------------------------------

StateVector::StateVector(SubsystemLayout layout, std::vector<cplx> amplitudes)
    : layout_(std::move(layout)), amps_(std::move(amplitudes)) {
  if (amps_.size() != layout_.total_dim()) {
    throw std::invalid_argument("amplitude count does not match layout dim");
  }
  check_finite(amps_, "StateVector");
  const double n = norm();
  if (std::abs(n - 1.0) > tol::construction) {
    throw std::invalid_argument("StateVector norm " + std::to_string(n) +
                                " deviates from 1 beyond 1e-12");
  }
}

StateVector StateVector::unnormalized(SubsystemLayout layout,
                                      std::vector<cplx> amplitudes) {
  StateVector out;
  out.layout_ = std::move(layout);
  out.amps_ = std::move(amplitudes);
  if (out.amps_.size() != out.layout_.total_dim()) {
    throw std::invalid_argument("amplitude count does not match layout dim");
  }
  check_finite(out.amps_, "StateVector");
  return out;
}

double StateVector::norm() const {
  return std::sqrt(kernels::sum_abs2(amps_.data(), amps_.size()));
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n < 1e-300) {
    throw std::invalid_argument("cannot normalize a zero vector");
  }
  std::vector<cplx> amps(amps_);
  kernels::scale(cplx{1.0 / n, 0.0}, amps.data(), amps.size());
  return StateVector(layout_, std::move(amps));
}

StateVector StateVector::relabeled(SubsystemLayout layout) const {
  if (layout.size() != layout_.size()) {
    throw std::invalid_argument("relabel: subsystem count mismatch");
  }
  for (std::size_t k = 0; k < layout.size(); ++k) {
    if (layout.at(k).dim != layout_.at(k).dim) {
      throw std::invalid_argument("relabel: dimension mismatch at position " +
                                  std::to_string(k));
    }
  }
  return unnormalized(std::move(layout), amps_);
}

// --- DensityMatrix --------------------------------------------------------

DensityMatrix::DensityMatrix(SubsystemLayout layout, std::vector<cplx> entries)
    : layout_(std::move(layout)), entries_(std::move(entries)) {
  const std::size_t n = layout_.total_dim();
  if (entries_.size() != n * n) {
    throw std::invalid_argument("entry count does not match layout dim^2");
  }
  check_finite(entries_, "DensityMatrix");
  double herm_dev = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      herm_dev = std::max(
          herm_dev, std::abs(entries_[r * n + c] -
                             std::conj(entries_[c * n + r])));
    }
  }
  if (herm_dev > tol::construction) {
    throw std::invalid_argument("DensityMatrix not Hermitian within 1e-12");
  }
  if (std::abs(trace() - cplx{1.0, 0.0}) > tol::construction) {
    throw std::invalid_argument("DensityMatrix trace deviates from 1");
  }
}

cplx DensityMatrix::trace() const {
  const std::size_t n = dim();
  cplx t{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) t += entries_[i * n + i];
  return t;
}

double DensityMatrix::purity() const {
  // tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
  return kernels::sum_abs2(entries_.data(), entries_.size());
}

DensityMatrix DensityMatrix::relabeled(SubsystemLayout layout) const {
  if (layout.size() != layout_.size()) {
    throw std::invalid_argument("relabel: subsystem count mismatch");
  }
  for (std::size_t k = 0; k < layout.size(); ++k) {
    if (layout.at(k).dim != layout_.at(k).dim) {
      throw std::invalid_argument("relabel: dimension mismatch at position " +
                                  std::to_string(k));
    }
  }
  return DensityMatrix(std::move(layout), entries_);
}

// --- Matrix ---------------------------------------------------------------

Matrix::Matrix(std::size_t n, std::vector<cplx> entries)
    : n_(n), e_(std::move(entries)) {
  if (e_.size() != n * n) {
    throw std::invalid_argument("Matrix entry count does not match n^2");
  }
  check_finite(e_, "Matrix");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = cplx{1.0, 0.0};
  return m;
}

cplx Matrix::trace() const {
  cplx t{0.0, 0.0};
  for (std::size_t i = 0; i < n_; ++i) t += e_[i * n_ + i];
  return t;
}

Matrix Matrix::adjoint() const {
  Matrix out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      out.at(c, r) = std::conj(e_[r * n_ + c]);
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (n_ != rhs.n_) {
    throw std::invalid_argument("Matrix product dimension mismatch");
  }
  Matrix out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t k = 0; k < n_; ++k) {
      const cplx a = e_[r * n_ + k];
      if (a == cplx{0.0, 0.0}) continue;
      kernels::axpy(a, rhs.e_.data() + k * n_, &out.at(r, 0), n_);
    }
  }
  return out;
}

std::vector<cplx> Matrix::apply(std::span<const cplx> v) const {
  if (v.size() != n_) {
    throw std::invalid_argument("Matrix apply dimension mismatch");
  }
  std::vector<cplx> out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    out[r] = kernels::dot(e_.data() + r * n_, v.data(), n_);
  }
  return out;
}

double Matrix::hermiticity_deviation() const {
  double dev = 0.0;
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = r; c < n_; ++c) {
      dev = std::max(dev,
                     std::abs(e_[r * n_ + c] - std::conj(e_[c * n_ + r])));
    }
  }
  return dev;
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("frobenius_distance dimension mismatch");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    acc += std::norm(a.entries()[i] - b.entries()[i]);
  }
  return std::sqrt(acc);
}

double frobenius_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("frobenius_distance dimension mismatch");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    acc += std::norm(a.entries()[i] - b.entries()[i]);
  }
  return std::sqrt(acc);
}

// --- tensor products ------------------------------------------------------

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  SubsystemLayout layout = SubsystemLayout::concat(a.layout(), b.layout());
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  std::vector<cplx> out(na * nb, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < na; ++i) {
    kernels::axpy(a[i], b.data(), out.data() + i * nb, nb);
  }
  return StateVector::unnormalized(std::move(layout), std::move(out));
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  SubsystemLayout layout = SubsystemLayout::concat(a.layout(), b.layout());
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  const std::size_t n = na * nb;
  std::vector<cplx> out(n * n, cplx{0.0, 0.0});
  for (std::size_t ra = 0; ra < na; ++ra) {
    for (std::size_t ca = 0; ca < na; ++ca) {
      const cplx w = a.entry(ra, ca);
      if (w == cplx{0.0, 0.0}) continue;
      for (std::size_t rb = 0; rb < nb; ++rb) {
        cplx* dst = out.data() + (ra * nb + rb) * n + ca * nb;
        kernels::axpy(w, b.data() + rb * nb, dst, nb);
      }
    }
  }
  return DensityMatrix(std::move(layout), std::move(out));
}

// --- permutations ---------------------------------------------------------

namespace {

// remap[old_flat] = new_flat for the subsystem reordering given by `order`.
std::vector<std::size_t> permutation_remap(const SubsystemLayout& layout,
                                           std::span<const std::string> order,
                                           SubsystemLayout& new_layout) {
  const std::size_t k = layout.size();
  if (order.size() != k) {
    throw std::invalid_argument("permutation must list every label once");
  }
  std::vector<std::size_t> old_pos(k);
  std::vector<bool> used(k, false);
  std::vector<Subsystem> subs;
  subs.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t p = layout.position(order[j]);
    if (used[p]) {
      throw std::invalid_argument("permutation repeats label \"" + order[j] +
                                  "\"");
    }
    used[p] = true;
    old_pos[j] = p;
    subs.push_back(layout.at(p));
  }
  new_layout = SubsystemLayout(std::move(subs));

  const std::size_t n = layout.total_dim();
  std::vector<std::size_t> remap(n);
  std::vector<int> digits(k);
  for (std::size_t i = 0; i < n; ++i) {
    layout.unpack(i, digits);
    std::size_t flat = 0;
    for (std::size_t j = 0; j < k; ++j) {
      flat += static_cast<std::size_t>(digits[old_pos[j]]) *
              new_layout.stride(j);
    }
    remap[i] = flat;
  }
  return remap;
}

}  // namespace

StateVector permute_subsystems(const StateVector& x,
                               std::span<const std::string> order) {
  SubsystemLayout new_layout;
  const auto remap = permutation_remap(x.layout(), order, new_layout);
  std::vector<cplx> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[remap[i]] = x[i];
  return StateVector::unnormalized(std::move(new_layout), std::move(out));
}

DensityMatrix permute_subsystems(const DensityMatrix& x,
                                 std::span<const std::string> order) {
  SubsystemLayout new_layout;
  const auto remap = permutation_remap(x.layout(), order, new_layout);
  const std::size_t n = x.dim();
  std::vector<cplx> out(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      out[remap[r] * n + remap[c]] = x.entry(r, c);
    }
  }
  return DensityMatrix(std::move(new_layout), std::move(out));
}

// --- partial trace / transpose --------------------------------------------

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::set<std::string>& keep) {
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep set must be non-empty");
  }
  const SubsystemLayout& layout = rho.layout();
  const std::size_t k = layout.size();
  std::vector<bool> kept(k, false);
  std::vector<Subsystem> kept_subs;
  for (const std::string& label : keep) {
    kept[layout.position(label)] = true;  // validates membership
  }
  for (std::size_t p = 0; p < k; ++p) {
    if (kept[p]) kept_subs.push_back(layout.at(p));
  }
  SubsystemLayout out_layout(std::move(kept_subs));

  // Decompose each flat index into its kept-part flat index and traced-part
  // flat index; entries contribute when the traced parts agree.
  const std::size_t n = layout.total_dim();
  std::vector<std::size_t> keep_part(n), trace_part(n);
  {
    std::vector<int> digits(k);
    std::vector<std::size_t> trace_stride(k, 0);
    std::size_t tstride = 1;
    for (std::size_t p = k; p-- > 0;) {
      if (!kept[p]) {
        trace_stride[p] = tstride;
        tstride *= static_cast<std::size_t>(layout.at(p).dim);
      }
    }
    std::vector<std::size_t> keep_stride(k, 0);
    std::size_t j = 0;
    for (std::size_t p = 0; p < k; ++p) {
      if (kept[p]) keep_stride[p] = out_layout.stride(j++);
    }
    for (std::size_t i = 0; i < n; ++i) {
      layout.unpack(i, digits);
      std::size_t kp = 0, tp = 0;
      for (std::size_t p = 0; p < k; ++p) {
        if (kept[p]) {
          kp += static_cast<std::size_t>(digits[p]) * keep_stride[p];
        } else {
          tp += static_cast<std::size_t>(digits[p]) * trace_stride[p];
        }
      }
      keep_part[i] = kp;
      trace_part[i] = tp;
    }
  }

  const std::size_t m = out_layout.total_dim();
  std::vector<cplx> out(m * m, cplx{0.0, 0.0});
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (trace_part[r] == trace_part[c]) {
        out[keep_part[r] * m + keep_part[c]] += rho.entry(r, c);
      }
    }
  }
  return DensityMatrix(std::move(out_layout), std::move(out));
}

Matrix partial_transpose(const DensityMatrix& rho, Party party) {
  const auto labels = rho.layout().labels_of(party);
  if (labels.empty()) {
    throw std::invalid_argument("partial_transpose: party has no subsystems");
  }
  return partial_transpose(rho,
                           std::set<std::string>(labels.begin(), labels.end()));
}

Matrix partial_transpose(const DensityMatrix& rho,
                         const std::set<std::string>& transposed) {
  const SubsystemLayout& layout = rho.layout();
  const std::size_t k = layout.size();
  const std::size_t n = layout.total_dim();
  std::vector<bool> flip(k, false);
  for (const std::string& label : transposed) {
    flip[layout.position(label)] = true;
  }

  // Split each index into transposed-part and untouched-part contributions;
  // the transposed parts of row and column swap.
  std::vector<std::size_t> t_comp(n), u_comp(n);
  {
    std::vector<int> digits(k);
    for (std::size_t i = 0; i < n; ++i) {
      layout.unpack(i, digits);
      std::size_t t = 0, u = 0;
      for (std::size_t p = 0; p < k; ++p) {
        const std::size_t contrib =
            static_cast<std::size_t>(digits[p]) * layout.stride(p);
        if (flip[p]) {
          t += contrib;
        } else {
          u += contrib;
        }
      }
      t_comp[i] = t;
      u_comp[i] = u;
    }
  }

  std::vector<cplx> out(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t rp = u_comp[r] + t_comp[c];
      const std::size_t cp = u_comp[c] + t_comp[r];
      out[rp * n + cp] = rho.entry(r, c);
    }
  }
  return Matrix(n, std::move(out));
}

// --- spectra ----------------------------------------------------------------

std::vector<double> hermitian_eigenvalues(const Matrix& m) {
  if (m.hermiticity_deviation() > tol::psd) {
    throw std::invalid_argument(
        "hermitian_eigenvalues: input deviates from Hermitian beyond 1e-10");
  }
  const std::size_t n = m.dim();
  Eigen::MatrixXcd h(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          0.5 * (m(r, c) + std::conj(m(c, r)));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian eigensolver failed to converge");
  }
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double trace_norm(const Matrix& m) {
  double acc = 0.0;
  for (double ev : hermitian_eigenvalues(m)) acc += std::abs(ev);
  return acc;
}

// --- fidelity / density -----------------------------------------------------

double fidelity_pure(const StateVector& phi, const StateVector& chi) {
  if (phi.dim() != chi.dim()) {
    throw std::invalid_argument("fidelity_pure: dimension mismatch");
  }
  const cplx ip = kernels::dot_conj(phi.data(), chi.data(), phi.dim());
  return std::clamp(std::norm(ip), 0.0, 1.0);
}

double fidelity_pure(const StateVector& phi, const DensityMatrix& rho) {
  const std::size_t n = phi.dim();
  if (n != rho.dim()) {
    throw std::invalid_argument("fidelity_pure: dimension mismatch");
  }
  std::vector<cplx> y(n);
  for (std::size_t r = 0; r < n; ++r) {
    y[r] = kernels::dot(rho.data() + r * n, phi.data(), n);
  }
  const cplx val = kernels::dot_conj(phi.data(), y.data(), n);
  return std::clamp(val.real(), 0.0, 1.0);
}

DensityMatrix density(const StateVector& phi) {
  const std::size_t n = phi.dim();
  std::vector<cplx> out(n * n, cplx{0.0, 0.0});
  for (std::size_t r = 0; r < n; ++r) {
    kernels::axpy_conj(phi[r], phi.data(), out.data() + r * n, n);
  }
  return DensityMatrix(phi.layout(), std::move(out));
}

// --- local operations ---------------------------------------------------------

StateVector apply_local_unitary(const StateVector& x, std::string_view label,
                                const Matrix& u) {
  const SubsystemLayout& layout = x.layout();
  const std::size_t pos = layout.position(label);
  const std::size_t d = static_cast<std::size_t>(layout.at(pos).dim);
  if (u.dim() != d) {
    throw std::invalid_argument("operator dim does not match subsystem dim");
  }
  const std::size_t stride = layout.stride(pos);
  const std::size_t block = d * stride;
  const std::size_t n = x.dim();
  std::vector<cplx> out(n);
  std::vector<cplx> col(d), res(d);
  for (std::size_t base = 0; base < n; base += block) {
    for (std::size_t inner = 0; inner < stride; ++inner) {
      for (std::size_t a = 0; a < d; ++a) {
        col[a] = x[base + inner + a * stride];
      }
      for (std::size_t a = 0; a < d; ++a) {
        cplx acc{0.0, 0.0};
        for (std::size_t b = 0; b < d; ++b) acc += u(a, b) * col[b];
        res[a] = acc;
      }
      for (std::size_t a = 0; a < d; ++a) {
        out[base + inner + a * stride] = res[a];
      }
    }
  }
  return StateVector::unnormalized(layout, std::move(out));
}

StateVector partial_inner_product(const StateVector& state,
                                  const StateVector& bra,
                                  std::span<const std::string> labels) {
  const SubsystemLayout& layout = state.layout();
  if (labels.size() != bra.layout().size()) {
    throw std::invalid_argument(
        "partial_inner_product: label count does not match bra layout");
  }
  const std::size_t k = layout.size();
  std::vector<bool> contracted(k, false);
  std::vector<std::size_t> bra_stride(k, 0);
  for (std::size_t j = 0; j < labels.size(); ++j) {
    const std::size_t p = layout.position(labels[j]);
    if (contracted[p]) {
      throw std::invalid_argument("partial_inner_product: repeated label");
    }
    if (layout.at(p).dim != bra.layout().at(j).dim) {
      throw std::invalid_argument(
          "partial_inner_product: dimension mismatch on \"" + labels[j] +
          "\"");
    }
    contracted[p] = true;
    bra_stride[p] = bra.layout().stride(j);
  }

  std::vector<Subsystem> rest_subs;
  for (std::size_t p = 0; p < k; ++p) {
    if (!contracted[p]) rest_subs.push_back(layout.at(p));
  }
  SubsystemLayout out_layout(std::move(rest_subs));
  std::vector<std::size_t> rest_stride(k, 0);
  {
    std::size_t j = 0;
    for (std::size_t p = 0; p < k; ++p) {
      if (!contracted[p]) rest_stride[p] = out_layout.stride(j++);
    }
  }

  std::vector<cplx> out(out_layout.total_dim(), cplx{0.0, 0.0});
  std::vector<int> digits(k);
  for (std::size_t i = 0; i < state.dim(); ++i) {
    layout.unpack(i, digits);
    std::size_t bidx = 0, ridx = 0;
    for (std::size_t p = 0; p < k; ++p) {
      if (contracted[p]) {
        bidx += static_cast<std::size_t>(digits[p]) * bra_stride[p];
      } else {
        ridx += static_cast<std::size_t>(digits[p]) * rest_stride[p];
      }
    }
    out[ridx] += std::conj(bra[bidx]) * state[i];
  }
  return StateVector::unnormalized(std::move(out_layout), std::move(out));
}

StateVector basis_state(SubsystemLayout layout, std::span<const int> digits) {
  if (digits.size() != layout.size()) {
    throw std::invalid_argument("basis_state: digit count mismatch");
  }
  for (std::size_t k = 0; k < layout.size(); ++k) {
    if (digits[k] < 0 || digits[k] >= layout.at(k).dim) {
      throw std::invalid_argument("basis_state: digit out of range");
    }
  }
  std::vector<cplx> amps(layout.total_dim(), cplx{0.0, 0.0});
  amps[layout.pack(digits)] = cplx{1.0, 0.0};
  return StateVector(std::move(layout), std::move(amps));
}

}  // namespace qlocc
