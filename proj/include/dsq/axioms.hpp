#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dsq/structures.hpp"

namespace dsq {

// One falsified axiom instance. `witness` holds the quantified variables in
// the order documented per family in docs/axioms.md; axiom_holds_at() below
// re-evaluates the family at exactly this point.
struct Violation {
  std::string axiom;   // family id: "idempotency", "2.2.5", "4.2.3", "gfam-2", ...
  std::string detail;  // the failing instance, with values substituted
  std::vector<int> witness;
};

struct AxiomReport {
  std::vector<Violation> violations;
  int families_checked = 0;

  bool passed() const noexcept { return violations.empty(); }
  std::string summary() const;
};

struct CheckOptions {
  // Also evaluates the literal companion identities printed alongside the
  // round-trip axioms, and the literal pair-map identity 2.2.3. These fail on
  // every known nontrivial structure; see docs/axioms.md.
  bool strict_223 = false;
  // Checks the G-family identity axiom as "x *^e x = x" instead of the
  // corrected "x *^e y = x".
  bool strict_gfam = false;
  // Checks homomorphism condition hom-4 against R1' instead of R2'.
  bool strict_hom = false;
};

// Thrown by operations that require a valid structure and received an invalid
// one; carries the offending report.
class InvalidStructure : public std::runtime_error {
public:
  InvalidStructure(const std::string& what, AxiomReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const AxiomReport& report() const noexcept { return report_; }

private:
  AxiomReport report_;
};

// General quandle: idempotency, right-invertibility, distributivity.
AxiomReport check_quandle(const OperationTable& op);

// Involutive quandle (kei): idempotency, involution, distributivity.
AxiomReport check_involutive_quandle(const OperationTable& op);

AxiomReport check_singquandle(const OperationTable& op, const OperationTable& r1, const OperationTable& r2,
                              const CheckOptions& opts = {});

AxiomReport check_disingquandle(const DisingquandleTable& d, const CheckOptions& opts = {});

AxiomReport check_g_family(const GFamily& f, const CheckOptions& opts = {});

// Early-exit equivalent of check_disingquandle(...).passed(); used by the
// search and enumeration loops where reports would be discarded anyway.
bool disingquandle_valid(const DisingquandleTable& d, const CheckOptions& opts = {});

// Quandle on G x X with (g,x)*(h,y) = (h^-1 g h, x *^h y), pairs enumerated as
// (g,x) -> g*n + x. Throws InvalidStructure if the result is not a quandle.
OperationTable induced_quandle(const GFamily& f);

// Re-evaluate a reported violation's axiom family at its witness. Used to
// check report soundness: a reported violation must evaluate to false.
bool axiom_holds_at(const OperationTable& op, const Violation& v);
bool axiom_holds_at(const OperationTable& op, const OperationTable& r1, const OperationTable& r2, const Violation& v,
                    const CheckOptions& opts = {});
bool axiom_holds_at(const DisingquandleTable& d, const Violation& v, const CheckOptions& opts = {});
bool axiom_holds_at(const GFamily& f, const Violation& v, const CheckOptions& opts = {});

}  // namespace dsq
