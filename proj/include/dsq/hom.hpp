#pragma once

#include <memory>
#include <span>
#include <vector>

#include "dsq/axioms.hpp"

namespace dsq {

// A map between disingquandles, given by images of the domain's elements.
struct StructureMap {
  std::shared_ptr<const DisingquandleTable> domain;
  std::shared_ptr<const DisingquandleTable> codomain;
  std::vector<int> values;
};

// Conditions hom-1..hom-4: f preserves *1, *2, R1 and R2 (hom-4 checks R2
// against R2'; the strict_hom flag checks it against R1' instead).
AxiomReport check_homomorphism(const DisingquandleTable& domain, const DisingquandleTable& codomain,
                               std::span<const int> values, const CheckOptions& opts = {});
AxiomReport check_homomorphism(const StructureMap& map, const CheckOptions& opts = {});

// Closure of the subset under *1, *2, R1, R2. The axioms are universally
// quantified equations, so they restrict to closed subsets automatically.
bool is_sub_disingquandle(const std::vector<int>& subset, const DisingquandleTable& d);

// Image set of a homomorphism, ascending. Throws InvalidStructure if the map
// is not a homomorphism.
std::vector<int> image_substructure(const StructureMap& map, const CheckOptions& opts = {});

// Every map X -> Y satisfying the homomorphism conditions, in lexicographic
// order of the value arrays. Exhaustive over |Y|^|X| candidates with early
// pruning on partial violations.
std::vector<StructureMap> enumerate_homs(const DisingquandleTable& x, const DisingquandleTable& y, int jobs = 1,
                                         const CheckOptions& opts = {});

}  // namespace dsq
