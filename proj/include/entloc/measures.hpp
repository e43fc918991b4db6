#pragma once

#include <string>
#include <vector>

#include "entloc/state.hpp"

namespace entloc {

enum class Measure {
  NTangle,
  GmeConcurrence,
  ConcentratableEntanglement,
  SqrtConcentratableEntanglement,
};

// A measure plus, for the concentratable kinds, the target subset s given as
// qubit labels of the state the measure is evaluated on.
struct MeasureKind {
  Measure variant = Measure::NTangle;
  std::vector<int> s;

  static MeasureKind ntangle() { return {Measure::NTangle, {}}; }
  static MeasureKind gme() { return {Measure::GmeConcurrence, {}}; }
  static MeasureKind ce(std::vector<int> s) {
    return {Measure::ConcentratableEntanglement, std::move(s)};
  }
  static MeasureKind sqrt_ce(std::vector<int> s) {
    return {Measure::SqrtConcentratableEntanglement, std::move(s)};
  }
  bool needs_s() const {
    return variant == Measure::ConcentratableEntanglement ||
           variant == Measure::SqrtConcentratableEntanglement;
  }
};

std::string measure_name(const MeasureKind& kind);

// |<psi|tilde(psi)>|.  Square-root convention: GHZ_n gives 1.  Identically 0
// for odd n (the pairing i <-> ~i cancels sign-for-sign).
double n_tangle(const StateVector& psi);

// min over bipartitions (gamma, complement) of sqrt(2 (1 - Tr psi_gamma^2)).
// Zero iff biseparable across some cut.
double gme_concurrence(const StateVector& psi);

// C(psi; s) = 1 - 2^{-|s|} sum_{gamma subseteq s} Tr(psi_gamma^2), with the
// empty set contributing 1.  |s| is capped at 12.
double concentratable_entanglement(const StateVector& psi,
                                   const SubsystemMask& s);

// Dispatch on kind; the zero vector (impossible branch) evaluates to 0 for
// every kind.
double evaluate(const MeasureKind& kind, const StateVector& psi);

// Translate a kind whose s uses full-register labels into one whose s is
// relative to the retained subsystem b (s must be a subset of b).
MeasureKind rebase_to_subsystem(const MeasureKind& kind,
                                const SubsystemMask& b);

}  // namespace entloc
