#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dsq {

// Combinatorial model of an unoriented dichromatic singular link diagram.
//
// Semi-arc granularity: arcs break at under-passes of classical crossings and
// at singular vertices; over-strands pass through classical crossings
// unbroken. A classical crossing stores (over, under_in, under_out); a
// singular crossing stores (in1, in2, out1, out2) with the color contract
// out1 = R1(in1, in2), out2 = R2(in1, in2). Strand continuity runs
// under_in <-> under_out at classical crossings and straight through the
// rigid vertex at singular ones: in1 <-> out2, in2 <-> out1.
//
// Diagrams are combinatorial only; planarity is the encoder's business.

struct ClassicalCrossing {
  std::string over, under_in, under_out;
  bool operator==(const ClassicalCrossing&) const = default;
};

struct SingularCrossing {
  std::string in1, in2, out1, out2;
  bool operator==(const SingularCrossing&) const = default;
};

struct Diagram {
  std::string name;
  std::vector<std::pair<std::string, int>> components;  // (id, label in {1,2})
  std::vector<std::pair<std::string, std::string>> arcs;  // (id, component id)
  std::vector<ClassicalCrossing> classical;
  std::vector<SingularCrossing> singular;
  std::vector<std::string> loops;  // components with no crossings on them

  bool has_arc(const std::string& id) const;
  const std::string& component_of(const std::string& arc) const;
  int label_of_component(const std::string& component) const;
  int label_of_arc(const std::string& arc) const { return label_of_component(component_of(arc)); }
  bool is_loop(const std::string& component) const;

  bool operator==(const Diagram&) const = default;
};

struct ValidationIssue {
  std::string code;     // e.g. "arc-ends", "trace-mixed-components"
  std::string message;  // names the offending id
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const noexcept { return issues.empty(); }
};

class InvalidDiagram : public std::runtime_error {
public:
  InvalidDiagram(const std::string& what, ValidationReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

private:
  ValidationReport report_;
};

// Structural invariants: arc end counts, loop shape, strand tracing staying
// inside one component, one strand cycle per component.
ValidationReport validate_diagram(const Diagram& d);

// Parses the link file format. Syntax or reference problems raise ParseError
// with a line number; a well-formed file describing a broken diagram raises
// InvalidDiagram with the validation report.
Diagram parse_diagram_text(const std::string& text);
Diagram load_diagram_file(const std::string& path);
std::string serialize(const Diagram& d);

// RI: splits `arc` at a new self-crossing (a free-loop arc just gains the
// crossing). The new diagram validates and has the same coloring count.
Diagram apply_kink(const Diagram& d, const std::string& arc);

// RII: pushes arc_a under arc_b twice; arc_b's strand is the over strand of
// both new crossings.
Diagram apply_poke(const Diagram& d, const std::string& arc_a, const std::string& arc_b);

// Exchanges the component labels 1 <-> 2 everywhere.
Diagram swap_labels(const Diagram& d);

}  // namespace dsq
