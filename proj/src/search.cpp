#include "dsq/search.hpp"

#include <algorithm>
#include <set>

#include "dsq/builders.hpp"
#include "dsq/parallel.hpp"

namespace dsq {

AffineFamily affine_family_from_name(std::string_view name) {
  if (name == "B" || name == "b" || name == "B-family" || name == "affine-B")
    return AffineFamily::B;
  if (name == "m" || name == "M" || name == "m-family" || name == "affine-m")
    return AffineFamily::M;
  throw StructureError("unknown affine family name: " + std::string(name));
}

std::vector<int> search_affine(int modulus, AffineFamily family, int jobs, const CheckOptions& opts) {
  if (modulus < 2)
    throw StructureError("affine search needs modulus >= 2");
  if (family == AffineFamily::M && modulus % 2 == 0)
    throw StructureError("affine-m needs an odd modulus (2-torsion breaks the construction)");

  std::vector<char> good(modulus, 0);
  parallel_for(jobs, 0, modulus, [&](int p) {
    DisingquandleTable d = family == AffineFamily::B ? build_affine_b(modulus, p) : build_affine_m(modulus, p);
    good[p] = disingquandle_valid(d, opts);
  });
  std::vector<int> out;
  for (int p = 0; p < modulus; ++p)
    if (good[p])
      out.push_back(p);
  return out;
}

namespace {

void involutions_fixing(int n, int fixed, std::vector<std::vector<int>>& out) {
  std::vector<int> perm(n, -1);
  perm[fixed] = fixed;
  std::function<void(int)> rec = [&](int i) {
    while (i < n && perm[i] != -1)
      ++i;
    if (i == n) {
      out.push_back(perm);
      return;
    }
    perm[i] = i;  // fixed point
    rec(i + 1);
    perm[i] = -1;
    for (int j = i + 1; j < n; ++j) {
      if (perm[j] != -1)
        continue;
      perm[i] = j;
      perm[j] = i;
      rec(i + 1);
      perm[i] = perm[j] = -1;
    }
  };
  rec(0);
}

bool distributive(const std::vector<int>& t, int n) {
  auto at = [&](int x, int y) { return t[x * n + y]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (at(at(x, y), z) != at(at(x, z), at(y, z)))
          return false;
  return true;
}

// Tri-state partial evaluation over a partially filled r2 with r1 derived
// from it through the *1 layer. Unknown cells are -1.
struct Partial {
  int n;
  const OperationTable& op1;
  const OperationTable& op2;
  const std::vector<int>& r2;

  int R2(int x, int y) const { return r2[x * n + y]; }
  int R1(int x, int y) const { return R2(op1.at(y, x), x); }

  // ok-so-far for all two-variable singular axioms; violated -> false.
  bool consistent() const {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int a = R1(x, y), b = R2(x, y);
        // derivation through *2 must agree with the *1 derivation
        int alt = R2(op2.at(y, x), x);
        if (a >= 0 && alt >= 0 && a != alt)
          return false;
        if (a >= 0 && b >= 0) {
          int t = R2(b, a);
          if (t >= 0 && t != x)
            return false;  // 2.2.1
          int u = R1(b, a);
          if (u >= 0 && u != y)
            return false;  // 2.2.2
        }
        // 2.2.6 plus the mixed variants: for w reached through either layer,
        // R1(w,x) combined with R2(w,x) under either operation must give b.
        for (const OperationTable* op : {&op1, &op2}) {
          int w = op->at(y, x);
          int p = R1(w, x), q = R2(w, x);
          if (p >= 0 && q >= 0 && b >= 0 && (op1.at(p, q) != b || op2.at(p, q) != b))
            return false;
        }
      }
    return true;
  }
};

std::vector<int> canonical_form(const DisingquandleTable& d) {
  int n = d.order();
  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i)
    sigma[i] = i;
  std::vector<int> best;
  do {
    DisingquandleTable r = d.relabeled(sigma);
    std::vector<int> key;
    key.reserve(4 * n * n);
    for (const auto* t : {&r.op1, &r.op2, &r.r1, &r.r2})
      key.insert(key.end(), t->entries().begin(), t->entries().end());
    if (best.empty() || key < best)
      best = std::move(key);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

DisingquandleTable from_flat(int n, const std::vector<int>& flat, std::string name) {
  auto take = [&](int k) {
    return OperationTable(n, std::vector<int>(flat.begin() + k * n * n, flat.begin() + (k + 1) * n * n));
  };
  return DisingquandleTable(std::move(name), take(0), take(1), take(2), take(3));
}

}  // namespace

std::vector<OperationTable> enumerate_involutive_quandles(int n) {
  std::vector<std::vector<std::vector<int>>> cols(n);
  for (int y = 0; y < n; ++y)
    involutions_fixing(n, y, cols[y]);

  std::vector<std::vector<int>> tables;
  std::vector<int> pick(n, 0), t(n * n);
  std::function<void(int)> rec = [&](int y) {
    if (y == n) {
      if (distributive(t, n))
        tables.push_back(t);
      return;
    }
    for (size_t c = 0; c < cols[y].size(); ++c) {
      for (int x = 0; x < n; ++x)
        t[x * n + y] = cols[y][c][x];
      rec(y + 1);
    }
  };
  rec(0);
  std::sort(tables.begin(), tables.end());
  std::vector<OperationTable> out;
  out.reserve(tables.size());
  for (auto& e : tables)
    out.emplace_back(n, std::move(e));
  return out;
}

std::vector<DisingquandleTable> enumerate_disingquandles(int order, const EnumerateOptions& opts) {
  if (order < 1)
    throw StructureError("enumeration needs order >= 1");
  if (order > opts.max_order)
    throw StructureError("refusing to enumerate order " + std::to_string(order) + ": above the configured limit of " +
                         std::to_string(opts.max_order) + " (the raw space is n^(4n^2))");

  int n = order;
  auto quandles = enumerate_involutive_quandles(n);
  int q = static_cast<int>(quandles.size());

  // Pairs surviving the mixed distributivity axioms; those do not involve R.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      const auto &a = quandles[i], &b = quandles[j];
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n && ok; ++y)
          for (int z = 0; z < n && ok; ++z)
            ok = b.at(a.at(x, y), z) == a.at(b.at(x, z), b.at(y, z)) &&
                 a.at(b.at(x, y), z) == b.at(a.at(x, z), a.at(y, z));
      if (ok)
        pairs.emplace_back(i, j);
    }

  std::vector<std::vector<DisingquandleTable>> buckets(pairs.size());
  parallel_for(opts.jobs, 0, static_cast<int>(pairs.size()), [&](int pi) {
    const auto& [i, j] = pairs[pi];
    const auto &a = quandles[i], &b = quandles[j];
    std::vector<int> r2(n * n, -1);
    Partial part{n, a, b, r2};

    std::function<void(int)> rec = [&](int cell) {
      if (cell == n * n) {
        std::vector<int> r1flat(n * n);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            r1flat[x * n + y] = part.R1(x, y);
        DisingquandleTable d("", a, b, OperationTable(n, r1flat), OperationTable(n, r2));
        if (disingquandle_valid(d, opts.check))
          buckets[pi].push_back(std::move(d));
        return;
      }
      for (int v = 0; v < n; ++v) {
        r2[cell] = v;
        if (part.consistent())
          rec(cell + 1);
      }
      r2[cell] = -1;
    };
    rec(0);
  });

  std::vector<DisingquandleTable> found;
  for (auto& bucket : buckets)
    for (auto& d : bucket)
      found.push_back(std::move(d));

  if (opts.up_to_iso) {
    std::set<std::vector<int>> classes;
    for (const auto& d : found)
      classes.insert(canonical_form(d));
    std::vector<DisingquandleTable> reps;
    int idx = 0;
    for (const auto& key : classes)
      reps.push_back(from_flat(n, key, "dsq" + std::to_string(n) + "-iso-" + std::to_string(idx++)));
    return reps;
  }

  for (size_t i = 0; i < found.size(); ++i)
    found[i].name = "dsq" + std::to_string(n) + "-" + std::to_string(i);
  return found;
}

}  // namespace dsq
