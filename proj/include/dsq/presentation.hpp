#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dsq/axioms.hpp"
#include "dsq/diagram.hpp"

namespace dsq {

// Words over the operations *1, *2, R1, R2 with arc names as generators.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Var, Op1, Op2, R1, R2 };
  Kind kind;
  std::string var;  // Kind::Var only
  TermPtr left, right;

  static TermPtr make_var(std::string name);
  static TermPtr make(Kind k, TermPtr l, TermPtr r);
};

bool term_equal(const TermPtr& a, const TermPtr& b);
bool term_contains(const TermPtr& t, const std::string& var);
TermPtr term_substitute(const TermPtr& t, const std::string& var, const TermPtr& replacement);
std::string term_to_string(const TermPtr& t);

struct PresentationRelation {
  TermPtr lhs, rhs;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<PresentationRelation> relations;
};

// Generators are the arcs (declaration order); one relation per classical
// crossing, two per singular crossing.
Presentation fundamental_presentation(const Diagram& d, bool simplify = false);

// Tietze elimination: repeatedly substitute any generator defined by a
// relation g = w (w free of g) into the other relations and drop it; stops at
// a fixed point. Trivial and duplicate relations are removed.
Presentation simplify_presentation(Presentation p);

// Number of assignments of X elements to the generators satisfying every
// relation; brute force over n^|generators| with staged pruning.
long long hom_count_via_presentation(const Presentation& p, const DisingquandleTable& X, int jobs = 1,
                                     const CheckOptions& opts = {});

std::string to_string(const Presentation& p);

}  // namespace dsq
