// LOCC protocol simulation by exhaustive branch enumeration.

#include "qlocc/protocols.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qlocc {

namespace {

std::string index_text(const BellIndex& idx) {
  return "(" + std::to_string(idx.m) + "," + std::to_string(idx.n) + ")";
}

Actor actor_of(Party p) { return p == Party::A ? Actor::Alice : Actor::Bob; }

void check_measurement_pair(const SubsystemLayout& layout,
                            const std::string& first,
                            const std::string& second) {
  const Subsystem& s1 = layout.at(layout.position(first));
  const Subsystem& s2 = layout.at(layout.position(second));
  if (first == second) {
    throw std::invalid_argument("bell_measurement: labels must differ");
  }
  if (s1.dim != s2.dim) {
    throw std::invalid_argument(
        "bell_measurement: subsystems have unequal dimensions");
  }
  if (s1.party != s2.party) {
    throw std::invalid_argument(
        "bell_measurement: both subsystems must belong to one party");
  }
}

// Resource for teleportation-based protocols: bipartite (A, B), dims (d, d).
void check_resource(const StateVector& resource, int d, const char* who) {
  const SubsystemLayout& l = resource.layout();
  if (l.size() != 2 || l.at(0).party != Party::A ||
      l.at(1).party != Party::B) {
    throw std::invalid_argument(
        std::string(who) +
        ": resource must be bipartite with subsystems ordered (A, B)");
  }
  if (l.at(0).dim != d || l.at(1).dim != d) {
    throw std::invalid_argument(std::string(who) +
                                ": resource dimensions must equal d");
  }
}

}  // namespace

std::string_view actor_name(Actor a) {
  return a == Actor::Alice ? "Alice" : "Bob";
}

std::string_view action_name(ActionKind k) {
  switch (k) {
    case ActionKind::LocalUnitary:
      return "LocalUnitary";
    case ActionKind::Measurement:
      return "Measurement";
    case ActionKind::ClassicalMessage:
      return "ClassicalMessage";
  }
  return "?";
}

bool transcript_consistent(const Transcript& t) {
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const TranscriptStep& step = t.steps[i];
    if (step.action == ActionKind::ClassicalMessage) {
      // A message announces the sender's own immediately preceding
      // measurement.
      if (i == 0) return false;
      const TranscriptStep& prev = t.steps[i - 1];
      if (prev.action != ActionKind::Measurement ||
          prev.actor != step.actor) {
        return false;
      }
    }
    if (step.cites.has_value()) {
      const std::size_t c = *step.cites;
      if (c >= i || t.steps[c].action != ActionKind::ClassicalMessage) {
        return false;
      }
    }
  }
  return true;
}

double BranchSet::probability_sum() const {
  double acc = pruned_mass;
  for (const Branch& b : branches) acc += b.probability;
  return acc;
}

BranchSet bell_measurement(const StateVector& state, const std::string& first,
                           const std::string& second) {
  const SubsystemLayout& layout = state.layout();
  check_measurement_pair(layout, first, second);
  const Subsystem& s1 = layout.at(layout.position(first));
  const Subsystem& s2 = layout.at(layout.position(second));
  const int d = s1.dim;
  const Actor actor = actor_of(s1.party);
  const std::vector<std::string> pair_labels{first, second};
  const std::vector<std::string> full_order = layout.labels();

  BranchSet out;
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      const BellIndex idx(d, m, n);
      const StateVector bra = bell_state(idx);
      StateVector remainder =
          partial_inner_product(state, bra, pair_labels);
      const double prob =
          kernels::sum_abs2(remainder.data(), remainder.dim());
      if (prob <= tol::branch_prune) {
        out.pruned_mass += prob;
        out.pruned_count += 1;
        continue;
      }

      // Collapse the pair in place: |phi_{m,n}> on (first, second) tensor
      // the renormalized remainder, back in the original subsystem order.
      std::vector<cplx> collapsed = bell_amplitudes(idx);
      SubsystemLayout pair_layout({{first, d, s1.party}, {second, d, s2.party}});
      StateVector post = [&] {
        if (remainder.layout().size() == 0) {
          const cplx amp = remainder[0];
          kernels::scale(amp / std::abs(amp), collapsed.data(),
                         collapsed.size());
          StateVector pair_state = StateVector::unnormalized(
              std::move(pair_layout), std::move(collapsed));
          return permute_subsystems(pair_state, full_order);
        }
        StateVector pair_state = StateVector::unnormalized(
            std::move(pair_layout), std::move(collapsed));
        return permute_subsystems(
            tensor_product(pair_state, remainder.normalized()), full_order);
      }();

      Transcript tr;
      tr.steps.push_back({actor, ActionKind::Measurement,
                          "bell(" + first + "," + second + ")->" +
                              index_text(idx),
                          std::nullopt});
      tr.steps.push_back(
          {actor, ActionKind::ClassicalMessage, index_text(idx), std::nullopt});
      out.branches.push_back(Branch{idx, prob, std::move(post), std::move(tr)});
    }
  }
  return out;
}

Matrix teleport_correction(const BellIndex& idx) {
  // W_{m,n} = Z^n X^{-m}: |k> -> w^{((k-m) mod d) n} |k-m mod d>. On branch
  // (m, n) Bob's raw state is sum_j w^{-jn} a_j |j+m>; W returns sum_j a_j
  // |j> with no residual global phase.
  const int d = idx.d;
  Matrix w(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const int row = ((k - idx.m) % d + d) % d;
    const double angle = 2.0 * std::numbers::pi *
                         static_cast<double>((static_cast<long long>(row) *
                                              idx.n) % d) /
                         static_cast<double>(d);
    w.at(static_cast<std::size_t>(row), static_cast<std::size_t>(k)) =
        cplx{std::cos(angle), std::sin(angle)};
  }
  return w;
}

BranchSet teleport(const StateVector& chi, const StateVector& resource) {
  if (chi.layout().size() != 1) {
    throw std::invalid_argument(
        "teleport: input must be a single-subsystem state");
  }
  const Subsystem& in_sub = chi.layout().at(0);
  if (in_sub.party != Party::A) {
    throw std::invalid_argument(
        "teleport: input must be co-located with Alice (party A)");
  }
  const int d = in_sub.dim;
  check_resource(resource, d, "teleport");
  const std::string in_label = in_sub.label;
  const std::string res_a = resource.layout().at(0).label;
  const std::string res_b = resource.layout().at(1).label;

  const StateVector joint = tensor_product(chi, resource);
  const std::vector<std::string> measured{in_label, res_a};

  BranchSet out;
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      const BellIndex idx(d, m, n);
      StateVector bob =
          partial_inner_product(joint, bell_state(idx), measured);
      const double prob = kernels::sum_abs2(bob.data(), bob.dim());
      if (prob <= tol::branch_prune) {
        out.pruned_mass += prob;
        out.pruned_count += 1;
        continue;
      }
      StateVector corrected = apply_local_unitary(
          bob.normalized(), res_b, teleport_correction(idx));

      Transcript tr;
      tr.steps.push_back({Actor::Alice, ActionKind::Measurement,
                          "bell(" + in_label + "," + res_a + ")->" +
                              index_text(idx),
                          std::nullopt});
      tr.steps.push_back({Actor::Alice, ActionKind::ClassicalMessage,
                          index_text(idx), std::nullopt});
      tr.steps.push_back({Actor::Bob, ActionKind::LocalUnitary,
                          "W" + index_text(idx) + " on " + res_b,
                          std::size_t{1}});
      out.branches.push_back(
          Branch{idx, prob, std::move(corrected), std::move(tr)});
    }
  }
  return out;
}

namespace {

struct Stage1Branch {
  BellIndex outcome;
  double probability;
  StateVector state;  // corrected, normalized, on the remaining subsystems
  Transcript transcript;
};

// Alice Bell-measures (A1, A2) on `joint` and Bob applies the Weyl
// correction on B2. Shared by discriminate and distill_copy.
std::vector<Stage1Branch> teleport_stage(const StateVector& joint, int d,
                                         double& pruned_mass) {
  const std::vector<std::string> measured{"A1", "A2"};
  std::vector<Stage1Branch> out;
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      const BellIndex idx(d, m, n);
      StateVector rest =
          partial_inner_product(joint, bell_state(idx), measured);
      const double prob = kernels::sum_abs2(rest.data(), rest.dim());
      if (prob <= tol::branch_prune) {
        pruned_mass += prob;
        continue;
      }
      StateVector corrected = apply_local_unitary(rest.normalized(), "B2",
                                                  teleport_correction(idx));
      Transcript tr;
      tr.steps.push_back({Actor::Alice, ActionKind::Measurement,
                          "bell(A1,A2)->" + index_text(idx), std::nullopt});
      tr.steps.push_back({Actor::Alice, ActionKind::ClassicalMessage,
                          index_text(idx), std::nullopt});
      tr.steps.push_back({Actor::Bob, ActionKind::LocalUnitary,
                          "W" + index_text(idx) + " on B2", std::size_t{1}});
      out.push_back(
          Stage1Branch{idx, prob, std::move(corrected), std::move(tr)});
    }
  }
  return out;
}

}  // namespace

double DiscriminationResult::distribution_sum() const {
  double acc = pruned_mass;
  for (double p : distribution) acc += p;
  return acc;
}

DiscriminationResult discriminate(const BellIndex& hidden,
                                  const StateVector& resource) {
  const int d = hidden.d;
  check_resource(resource, d, "discriminate");

  const StateVector flag = bell_state(hidden, "A1", "B1");
  const StateVector psi = resource.relabeled(
      SubsystemLayout({{"A2", d, Party::A}, {"B2", d, Party::B}}));
  const StateVector joint = tensor_product(flag, psi);  // (A1, B1, A2, B2)

  DiscriminationResult result{
      d, hidden, std::vector<double>(static_cast<std::size_t>(d) * d, 0.0),
      {}, 0.0};
  auto stage1 = teleport_stage(joint, d, result.pruned_mass);

  const std::vector<std::string> bob_pair{"B2", "B1"};
  for (const Stage1Branch& b : stage1) {
    for (int m = 0; m < d; ++m) {
      for (int n = 0; n < d; ++n) {
        const BellIndex announced(d, m, n);
        // Bob measures the ordered pair (B2, B1): teleported qudit first.
        StateVector scalar =
            partial_inner_product(b.state, bell_state(announced), bob_pair);
        const double leaf_prob = b.probability * std::norm(scalar[0]);
        if (leaf_prob <= tol::branch_prune) {
          result.pruned_mass += leaf_prob;
          continue;
        }
        Transcript tr = b.transcript;
        tr.steps.push_back({Actor::Bob, ActionKind::Measurement,
                            "bell(B2,B1)->" + index_text(announced),
                            std::nullopt});
        tr.steps.push_back({Actor::Bob, ActionKind::ClassicalMessage,
                            index_text(announced), std::nullopt});
        result.distribution[static_cast<std::size_t>(announced.lex())] +=
            leaf_prob;
        result.leaves.push_back(DiscriminationLeaf{b.outcome, announced,
                                                   leaf_prob, std::move(tr)});
      }
    }
  }
  return result;
}

double DistillResult::expected_fidelity() const {
  if (leaves.empty()) return 0.0;
  const int dd = leaves.front().output.layout().at(0).dim;
  const StateVector target = bell_state(BellIndex(dd, 0, 0));
  double acc = 0.0;
  for (const DistillLeaf& leaf : leaves) {
    acc += leaf.probability * fidelity_pure(target, leaf.output);
  }
  return acc;
}

bool DistillResult::announced_deterministic() const {
  for (const DistillLeaf& leaf : leaves) {
    if (!(leaf.announced == component)) return false;
  }
  return !leaves.empty();
}

DistillResult distill_copy(int d, const BellIndex& component,
                           const StateVector& psi) {
  if (component.d != d) {
    throw std::invalid_argument("distill_copy: component index has wrong d");
  }
  check_resource(psi, d, "distill_copy");

  const StateVector flag1 = bell_state(component, "A1", "B1");
  const StateVector res = psi.relabeled(
      SubsystemLayout({{"A2", d, Party::A}, {"B2", d, Party::B}}));
  const StateVector flag3 =
      bell_state(BellIndex(d, component.m, component.neg_n()), "A3", "B3");
  const StateVector joint =
      tensor_product(tensor_product(flag1, res), flag3);

  DistillResult result{d, component, {}, 0.0};
  auto stage1 = teleport_stage(joint, d, result.pruned_mass);

  const std::vector<std::string> bob_pair{"B2", "B1"};
  for (const Stage1Branch& b : stage1) {
    for (int m = 0; m < d; ++m) {
      for (int n = 0; n < d; ++n) {
        const BellIndex announced(d, m, n);
        StateVector rest =
            partial_inner_product(b.state, bell_state(announced), bob_pair);
        const double leaf_prob =
            b.probability * kernels::sum_abs2(rest.data(), rest.dim());
        if (leaf_prob <= tol::branch_prune) {
          result.pruned_mass += leaf_prob;
          continue;
        }
        // Both parties now know (m, n); Bob rotates the third flag back:
        // U_{m,(d-n) mod d}^dag maps |phi_{m,-n}> to |phi_{0,0}>.
        const Matrix undo =
            weyl_operator(BellIndex(d, m, announced.neg_n())).adjoint();
        StateVector output =
            apply_local_unitary(rest.normalized(), "B3", undo);

        Transcript tr = b.transcript;
        tr.steps.push_back({Actor::Bob, ActionKind::Measurement,
                            "bell(B2,B1)->" + index_text(announced),
                            std::nullopt});
        tr.steps.push_back({Actor::Bob, ActionKind::ClassicalMessage,
                            index_text(announced), std::nullopt});
        tr.steps.push_back({Actor::Bob, ActionKind::LocalUnitary,
                            "Wdag(" + std::to_string(m) + "," +
                                std::to_string(announced.neg_n()) +
                                ") on B3",
                            tr.steps.size() - 1});
        result.leaves.push_back(DistillLeaf{b.outcome, announced, leaf_prob,
                                            std::move(output), std::move(tr)});
      }
    }
  }
  return result;
}

DensityMatrix premessage_bob_marginal(const BellIndex& hidden,
                                      const StateVector& resource) {
  const int d = hidden.d;
  check_resource(resource, d, "premessage_bob_marginal");
  const StateVector flag = bell_state(hidden, "A1", "B1");
  const StateVector psi = resource.relabeled(
      SubsystemLayout({{"A2", d, Party::A}, {"B2", d, Party::B}}));
  const StateVector joint = tensor_product(flag, psi);

  // Sum over Alice's (unannounced) outcomes of p * |rest><rest| — the
  // unnormalized projections supply the probability weights directly.
  const std::vector<std::string> measured{"A1", "A2"};
  SubsystemLayout bob_layout({{"B1", d, Party::B}, {"B2", d, Party::B}});
  const std::size_t nb = bob_layout.total_dim();
  std::vector<cplx> accum(nb * nb, cplx{0.0, 0.0});
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      StateVector rest = partial_inner_product(
          joint, bell_state(BellIndex(d, m, n)), measured);
      for (std::size_t r = 0; r < nb; ++r) {
        kernels::axpy_conj(rest[r], rest.data(), accum.data() + r * nb, nb);
      }
    }
  }
  return DensityMatrix(std::move(bob_layout), std::move(accum));
}

}  // namespace qlocc
