#include "dsq/hom.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dsq/parallel.hpp"

namespace dsq {

namespace {

std::string at2(int x, int y) {
  std::ostringstream os;
  os << "(x=" << x << ", y=" << y << ")";
  return os.str();
}

}  // namespace

AxiomReport check_homomorphism(const DisingquandleTable& X, const DisingquandleTable& Y, std::span<const int> f,
                               const CheckOptions& opts) {
  if (f.size() != static_cast<size_t>(X.order()))
    throw StructureError("map must assign an image to every domain element");
  for (int v : f)
    if (v < 0 || v >= Y.order())
      throw StructureError("map value out of codomain range");

  AxiomReport rep;
  rep.families_checked = 4;
  int n = X.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (f[X.op1.at(x, y)] != Y.op1.at(f[x], f[y]))
        rep.violations.push_back({"hom-1", "f(x*1y) != f(x)*1'f(y) at " + at2(x, y), {x, y}});
      if (f[X.op2.at(x, y)] != Y.op2.at(f[x], f[y]))
        rep.violations.push_back({"hom-2", "f(x*2y) != f(x)*2'f(y) at " + at2(x, y), {x, y}});
      if (f[X.r1.at(x, y)] != Y.r1.at(f[x], f[y]))
        rep.violations.push_back({"hom-3", "f(R1(x,y)) != R1'(f(x),f(y)) at " + at2(x, y), {x, y}});
      const OperationTable& target = opts.strict_hom ? Y.r1 : Y.r2;
      if (f[X.r2.at(x, y)] != target.at(f[x], f[y]))
        rep.violations.push_back({"hom-4", "f(R2(x,y)) != R2'(f(x),f(y)) at " + at2(x, y), {x, y}});
    }
  return rep;
}

AxiomReport check_homomorphism(const StructureMap& map, const CheckOptions& opts) {
  return check_homomorphism(*map.domain, *map.codomain, map.values, opts);
}

bool is_sub_disingquandle(const std::vector<int>& subset, const DisingquandleTable& d) {
  if (subset.empty())
    throw StructureError("subset must be nonempty");
  std::vector<char> in(d.order(), 0);
  for (int v : subset) {
    if (v < 0 || v >= d.order())
      throw StructureError("subset index out of range");
    in[v] = 1;
  }
  for (int x : subset)
    for (int y : subset)
      if (!in[d.op1.at(x, y)] || !in[d.op2.at(x, y)] || !in[d.r1.at(x, y)] || !in[d.r2.at(x, y)])
        return false;
  return true;
}

std::vector<int> image_substructure(const StructureMap& map, const CheckOptions& opts) {
  AxiomReport rep = check_homomorphism(map, opts);
  if (!rep.passed())
    throw InvalidStructure("image_substructure requires a homomorphism", std::move(rep));
  std::set<int> img(map.values.begin(), map.values.end());
  return std::vector<int>(img.begin(), img.end());
}

namespace {

// Constraint f(t(a,b)) == t'(f(a), f(b)) becomes checkable once a, b and
// t(a,b) are all assigned; bucket each by that point in the assignment order.
struct HomSearch {
  const DisingquandleTable& X;
  const DisingquandleTable& Y;
  bool strict;
  struct Cons {
    const OperationTable* src;
    const OperationTable* dst;
    int a, b;
  };
  std::vector<std::vector<Cons>> by_stage;

  HomSearch(const DisingquandleTable& x, const DisingquandleTable& y, bool strict_hom)
      : X(x), Y(y), strict(strict_hom), by_stage(x.order()) {
    const OperationTable* pairs[4][2] = {{&X.op1, &Y.op1}, {&X.op2, &Y.op2}, {&X.r1, &Y.r1},
                                         {&X.r2, strict ? &Y.r1 : &Y.r2}};
    for (auto& [src, dst] : pairs)
      for (int a = 0; a < X.order(); ++a)
        for (int b = 0; b < X.order(); ++b) {
          int stage = std::max({a, b, src->at(a, b)});
          by_stage[stage].push_back({src, dst, a, b});
        }
  }

  bool stage_ok(const std::vector<int>& f, int stage) const {
    for (const auto& c : by_stage[stage])
      if (f[c.src->at(c.a, c.b)] != c.dst->at(f[c.a], f[c.b]))
        return false;
    return true;
  }

  void dfs(std::vector<int>& f, int stage, const std::function<void(const std::vector<int>&)>& found) const {
    if (stage == X.order()) {
      found(f);
      return;
    }
    for (int v = 0; v < Y.order(); ++v) {
      f[stage] = v;
      if (stage_ok(f, stage))
        dfs(f, stage + 1, found);
    }
  }
};

}  // namespace

std::vector<StructureMap> enumerate_homs(const DisingquandleTable& x, const DisingquandleTable& y, int jobs,
                                         const CheckOptions& opts) {
  auto dom = std::make_shared<const DisingquandleTable>(x);
  auto cod = std::make_shared<const DisingquandleTable>(y);
  HomSearch search(x, y, opts.strict_hom);

  int split = std::min(std::max(jobs, 1), y.order());
  std::vector<std::vector<std::vector<int>>> buckets(y.order());
  parallel_for(split, 0, y.order(), [&](int first) {
    std::vector<int> f(x.order(), 0);
    f[0] = first;
    if (x.order() == 0)
      return;
    if (search.stage_ok(f, 0))
      search.dfs(f, 1, [&](const std::vector<int>& g) { buckets[first].push_back(g); });
  });

  std::vector<StructureMap> out;
  for (auto& bucket : buckets)
    for (auto& vals : bucket)
      out.push_back({dom, cod, std::move(vals)});
  return out;
}

}  // namespace dsq
