#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "adfkit/adf.hpp"
#include "adfkit/frameworks.hpp"

namespace adfkit {

// One strong-consistency violation.
//  AFN:  `offender` both attacks and supports `target` (other/dset unused).
//  EAFC: `offender` attacks `target` while also being a member of `dset`,
//        which defense-attacks the attack (`other`, `target`).
struct ConsistencyWitness {
  std::string target;
  std::string offender;
  std::string other;
  std::vector<std::string> dset;
};

struct ConsistencyReport {
  bool consistent = true;
  std::vector<ConsistencyWitness> witnesses;
};

ConsistencyReport check_consistency(const Afn& f);
ConsistencyReport check_consistency(const Eafc& f);

std::string to_string(const ConsistencyReport& report);

// Thrown by the EAFC and AFN translations on strongly inconsistent input;
// the input is refused, not repaired.
struct inconsistent_input : std::runtime_error {
  explicit inconsistent_input(ConsistencyReport r)
      : std::runtime_error("input framework is not strongly consistent"),
        report(std::move(r)) {}
  ConsistencyReport report;
};

// C_a = conjunction of the negated attackers; top if unattacked.
Adf translate_af(const Af& f);
// C_a = conjunction over attacking sets X_i of (disjunction of negated X_i
// members); top if unattacked.
Adf translate_setaf(const Setaf& f);
// C_a = conjunction over attackers b of (¬b ∨ disjunction of the conjoined
// defense-attacking sets of (b,a)); top if unattacked.
Adf translate_eafc(const Eafc& f);
// C_a = attack part ∧ support part, where the support part conjoins one
// disjunction per necessity set.
Adf translate_afn(const Afn& f);

Adf translate(const SourceFramework& f);

}  // namespace adfkit
