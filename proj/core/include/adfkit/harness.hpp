#pragma once

#include <string>
#include <utility>
#include <vector>

#include "adfkit/adf.hpp"
#include "adfkit/frameworks.hpp"
#include "adfkit/generate.hpp"
#include "adfkit/semantics.hpp"

namespace adfkit {

struct DiffFailure {
  GenParams params;    // sufficient to regenerate the instance
  std::string check;   // which comparison failed
  std::vector<std::vector<std::string>> expected;
  std::vector<std::vector<std::string>> actual;
  std::string instance;  // serialized source framework
};

struct DiffReport {
  int trials = 0;
  std::vector<DiffFailure> failures;
  // Existential theorem clauses whose witness never showed up; soft, never
  // a failure.
  std::vector<std::string> warnings;

  bool ok() const { return failures.empty(); }
  void merge(const DiffReport& other);
};

std::string to_string(const DiffReport& report);

// Generates `trials` instances (trial i uses seed p.seed + i and an argument
// count drawn from [2, p.n_args]), translates each, and compares the native
// extension families against the corresponding ADF families as exact
// set-of-sets equality:
//   AF/SETAF: conflict-free = cf = pd-acyclic cf, stable = stable = model,
//             grounded = grounded = acyclic grounded, and admissible /
//             complete / preferred against all of cc, aa and ca2.
//   EAFC:     conflict-free = cf, stable = model, grounded = acyclic
//             grounded, admissible/complete/preferred against ca2.
//   AFN:      strongly coherent = pd-acyclic cf, stable = stable, grounded
//             = acyclic grounded, admissible/complete/preferred against aa.
DiffReport difftest(FrameworkKind kind, const GenParams& p, int trials);

enum class SuiteId {
  lemma1_chain,       // discarded-set chain and disjointness over all cf sets
  aadf_collapse,      // family collapse on AADF+ instances
  af_order,           // stable ⊆ preferred ⊆ complete, grounded least
  setaf_order,        // preferred ⊆ complete, grounded least, meets exist
  eafc_order,         // preferred/stable ⊆ complete, grounded minimal
  afn_order,          // grounded least, preferred maximal, stable ⊆ preferred
  cdefrei,            // reinstatement fixpoint vs blocking sequence vs brute
  eafc_stable_dual,   // discarded-based vs defeat-all-outsiders stable
  afn_stable_dual,    // strongly-coherent/X^att vs complete/X^+ stable
};

DiffReport check_lemma_suite(const Adf& adf, SuiteId suite);
DiffReport check_lemma_suite(const SourceFramework& f, SuiteId suite);

// Literal subset search over the defeat pairs originating in x; ground
// truth for eafc_has_reinstatement.  Refuses instances with more than 12
// such pairs.
bool reinstatement_bruteforce(const Eafc& f, Mask x, std::pair<int, int> defeat);

// Blocking-sequence characterization: true iff a sequence of distinct
// defense attacks exists that shows the defeat has no reinstatement set on
// x (so it returns the negation of eafc_has_reinstatement for conflict-free
// x).
bool cdefrei_blocking_sequence_exists(const Eafc& f, Mask x,
                                      std::pair<int, int> defeat);

// X^att straight from the quantifier over coherent sets; ground truth for
// afn_discarded on small instances.
Mask afn_discarded_by_definition(const Afn& f, Mask x);

// Independent enumeration of the positive dependency evaluations through
// materialized maximally sound pd-functions over every subset of the
// arguments.  Exponential; intended for instances with at most ~6 arguments.
std::vector<std::vector<Evaluation>> evaluations_via_pd_functions(
    const Adf& adf);

}  // namespace adfkit
