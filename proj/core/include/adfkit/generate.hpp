#pragma once

#include <cstdint>

#include "adfkit/adf.hpp"
#include "adfkit/frameworks.hpp"

namespace adfkit {

// Seeded instance generation.  The same parameters always produce the same
// instance, bit for bit; EAFC and AFN instances are strongly consistent by
// construction (violating edges are dropped).
struct GenParams {
  std::uint64_t seed = 1;
  int n_args = 6;
  double edge_prob = 0.25;

  int max_attack_set = 2;       // SETAF: largest attacking-set size
  double dattack_prob = 0.5;    // EAFC: defense-attack probability per attack
  int max_dattack_set = 2;
  double necessity_prob = 0.4;  // AFN: necessity-set probability per argument
  int max_necessity_set = 2;
  // Probability of planting a support cycle (AFN) or a defense-attack chain
  // (EAFC); the interesting subclass behaviour needs cyclic structure.
  double cycle_bias = 0.3;
};

SourceFramework gen(FrameworkKind kind, const GenParams& p);

// Random ADF with arbitrary small conditions; used by the discarded-set
// property suites next to translation-produced instances.
Adf gen_adf(const GenParams& p);

}  // namespace adfkit
