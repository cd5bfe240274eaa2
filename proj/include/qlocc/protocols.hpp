// protocols.hpp
// Exact branch-enumeration simulation of the LOCC protocols: generalized Bell
// measurement, qudit teleportation, the teleport-then-measure discrimination
// protocol, and the per-copy distillation routine. No sampling: every branch
// is enumerated with its exact probability. Branches below probability 1e-14
// are dropped and their mass recorded.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlocc/report.hpp"
#include "qlocc/states.hpp"
#include "qlocc/tensor.hpp"

namespace qlocc {

enum class Actor : std::uint8_t { Alice, Bob };
enum class ActionKind : std::uint8_t {
  LocalUnitary,
  Measurement,
  ClassicalMessage
};

std::string_view actor_name(Actor a);
std::string_view action_name(ActionKind k);

struct TranscriptStep {
  Actor actor;
  ActionKind action;
  std::string payload;
  /// Index of the prior ClassicalMessage step this action is conditioned on.
  std::optional<std::size_t> cites;
};

/// Ordered record of one protocol run's local operations and messages.
struct Transcript {
  std::vector<TranscriptStep> steps;
};

/// A transcript is consistent when every conditioned action cites an earlier
/// ClassicalMessage from the other party, and every message immediately
/// follows a step by the same actor (announcing that party's own outcome).
bool transcript_consistent(const Transcript& t);

struct Branch {
  BellIndex outcome;
  double probability;
  StateVector post_state;
  Transcript transcript;
};

struct BranchSet {
  std::vector<Branch> branches;
  double pruned_mass = 0.0;
  int pruned_count = 0;

  double probability_sum() const;
};

/// Projective measurement in the canonical Bell basis of the ordered
/// subsystem pair (first_label, second_label). Both subsystems must have the
/// same dimension and belong to the same party. Post-states keep the full
/// layout: the measured pair collapses to |phi_{m,n}> and the remainder is
/// renormalized.
BranchSet bell_measurement(const StateVector& state,
                           const std::string& first_label,
                           const std::string& second_label);

/// Weyl correction for teleportation branch (m, n): W_{m,n} = Z^n X^{-m},
/// the unique Weyl operator returning the input state on that branch.
Matrix teleport_correction(const BellIndex& idx);

/// Teleport the single-subsystem state chi through `resource` (bipartite,
/// dims d x d). Alice Bell-measures (chi, resource A half) and announces;
/// Bob applies the Weyl correction. Branch post-states live on Bob's
/// resource label.
BranchSet teleport(const StateVector& chi, const StateVector& resource);

struct DiscriminationLeaf {
  BellIndex teleport_outcome;
  BellIndex announced;
  double probability;
  Transcript transcript;
};

struct DiscriminationResult {
  int d;
  BellIndex hidden;
  /// P(announced = (m, n)) in (m, n)-lexicographic order, d^2 entries.
  std::vector<double> distribution;
  std::vector<DiscriminationLeaf> leaves;
  double pruned_mass = 0.0;

  double success_probability() const {
    return distribution[static_cast<std::size_t>(hidden.lex())];
  }
  double distribution_sum() const;
};

/// The sufficiency-direction protocol: the hidden Bell state sits on
/// (A1, B1); Alice teleports A1 to Bob through the resource on (A2, B2);
/// Bob Bell-measures the ordered pair (B2, B1) and announces the index.
DiscriminationResult discriminate(const BellIndex& hidden,
                                  const StateVector& resource);

struct DistillLeaf {
  BellIndex teleport_outcome;
  BellIndex announced;
  double probability;
  StateVector output;  // on (A3, B3) after Bob's inverse Weyl correction
  Transcript transcript;
};

struct DistillResult {
  int d;
  BellIndex component;
  std::vector<DistillLeaf> leaves;
  double pruned_mass = 0.0;

  /// Sum_leaf p * F(output, |phi_{0,0}>).
  double expected_fidelity() const;
  /// True when every leaf announces the component index.
  bool announced_deterministic() const;
};

/// One copy of the rho mixture term labeled by `component`: discriminate the
/// (A1, B1) flag through psi, then Bob maps |phi_{m,-n}> on (A3, B3) back to
/// |phi_{0,0}> with the inverse Weyl U_{m,(d-n) mod d}^dag on B3.
DistillResult distill_copy(int d, const BellIndex& component,
                           const StateVector& psi);

/// Bob's averaged post-measurement state on (B1, B2) before Alice's message
/// arrives; independent of `hidden` by no-signaling.
DensityMatrix premessage_bob_marginal(const BellIndex& hidden,
                                      const StateVector& resource);

/// Run the named verification suites (basis, teleport, discriminate,
/// necessity) up to config.max_d and aggregate check results. Throws on an
/// unknown suite name. Deterministic for a fixed config.
Report run_suite(const SuiteConfig& config);

}  // namespace qlocc
