#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "dsq/axioms.hpp"

namespace dsq {

enum class AffineFamily { B, M };

AffineFamily affine_family_from_name(std::string_view name);

// All parameter values in Z_modulus for which the affine family passes
// check_disingquandle, ascending.
std::vector<int> search_affine(int modulus, AffineFamily family, int jobs = 1, const CheckOptions& opts = {});

struct EnumerateOptions {
  bool up_to_iso = false;
  int jobs = 1;
  int max_order = 4;  // raw space is n^(4n^2); refuse above this
  CheckOptions check;
};

// All involutive quandle tables on {0..n-1}, lexicographic by entries.
std::vector<OperationTable> enumerate_involutive_quandles(int n);

// Every valid structure of the given order, deterministically ordered
// regardless of worker count. With up_to_iso, one representative per
// isomorphism class (the least relabeling), ordered the same way.
std::vector<DisingquandleTable> enumerate_disingquandles(int order, const EnumerateOptions& opts = {});

}  // namespace dsq
