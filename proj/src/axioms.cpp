#include "dsq/axioms.hpp"

#include <sstream>

namespace dsq {

namespace {

std::string wtn(std::initializer_list<std::pair<const char*, int>> vars) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (auto& [k, v] : vars) {
    if (!first)
      os << ", ";
    os << k << "=" << v;
    first = false;
  }
  os << ")";
  return os.str();
}

struct Sing {
  const OperationTable& op;
  const OperationTable& r1;
  const OperationTable& r2;
  int n() const { return op.order(); }
};

// Round-trip at a singular crossing: reading the crossing from the other side
// recovers the inputs. These are the halves of the printed chains that every
// known example satisfies; the companion literal identities live behind
// strict_223 together with the literal pair-map identity.
bool sq_221(const Sing& s, int x, int y, bool strict) {
  int a = s.r1.at(x, y), b = s.r2.at(x, y);
  bool ok = s.r2.at(b, a) == x;
  if (strict)
    ok = ok && s.r1.at(y, b) == x;
  return ok;
}

bool sq_222(const Sing& s, int x, int y, bool strict) {
  int a = s.r1.at(x, y), b = s.r2.at(x, y);
  bool ok = s.r1.at(b, a) == y;
  if (strict)
    ok = ok && s.r2.at(b, x) == y;
  return ok;
}

bool sq_223(const Sing& s, int x, int y) {
  int b = s.r2.at(x, y);
  return s.r1.at(x, y) == s.r1.at(y, b) && b == s.r2.at(b, x);
}

bool sq_224(const Sing& s, int x, int y, int z) {
  return s.op.at(s.op.at(y, z), s.r2.at(x, z)) == s.op.at(s.op.at(y, x), s.r1.at(x, z));
}

bool sq_225(const Sing& s, int x, int y) { return s.r1.at(x, y) == s.r2.at(s.op.at(y, x), x); }

bool sq_226(const Sing& s, int x, int y) {
  int w = s.op.at(y, x);
  return s.r2.at(x, y) == s.op.at(s.r1.at(w, x), s.r2.at(w, x));
}

bool sq_227(const Sing& s, int x, int y, int z) {
  return s.op.at(s.r1.at(s.op.at(x, y), z), y) == s.r1.at(x, s.op.at(z, y));
}

bool sq_228(const Sing& s, int x, int y, int z) {
  return s.r2.at(s.op.at(x, y), z) == s.op.at(s.r2.at(x, s.op.at(z, y)), y);
}

bool involutive_quandle_at(const OperationTable& op, int x, int y, int z) {
  return op.at(x, x) == x && op.at(op.at(x, y), y) == x && op.at(op.at(x, y), z) == op.at(op.at(x, z), op.at(y, z));
}

struct Emitter {
  AxiomReport& report;
  void operator()(std::string axiom, std::string detail, std::vector<int> witness) const {
    report.violations.push_back({std::move(axiom), std::move(detail), std::move(witness)});
  }
};

// Quandle premise of the singular layer, folded under one family id.
void check_quandle_premise(const OperationTable& op, const std::string& tag, const Emitter& emit) {
  int n = op.order();
  for (int x = 0; x < n; ++x)
    if (op.at(x, x) != x)
      emit("quandle", tag + "idempotency: x*x != x at " + wtn({{"x", x}}), {x, x, x});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (op.at(op.at(x, y), y) != x)
        emit("quandle", tag + "involution: (x*y)*y != x at " + wtn({{"x", x}, {"y", y}}), {x, y, y});
      for (int z = 0; z < n; ++z)
        if (op.at(op.at(x, y), z) != op.at(op.at(x, z), op.at(y, z)))
          emit("quandle", tag + "distributivity fails at " + wtn({{"x", x}, {"y", y}, {"z", z}}), {x, y, z});
    }
}

void check_singular_layer(const Sing& s, const std::string& tag, bool strict, const Emitter& emit) {
  int n = s.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!sq_221(s, x, y, strict))
        emit("2.2.1", tag + "round trip does not recover x at " + wtn({{"x", x}, {"y", y}}), {x, y});
      if (!sq_222(s, x, y, strict))
        emit("2.2.2", tag + "round trip does not recover y at " + wtn({{"x", x}, {"y", y}}), {x, y});
      if (strict && !sq_223(s, x, y))
        emit("2.2.3", tag + "literal pair-map identity fails at " + wtn({{"x", x}, {"y", y}}), {x, y});
      if (!sq_225(s, x, y))
        emit("2.2.5", tag + "R1(x,y) != R2(y*x, x) at " + wtn({{"x", x}, {"y", y}}), {x, y});
      if (!sq_226(s, x, y))
        emit("2.2.6", tag + "R2(x,y) != R1(y*x,x)*R2(y*x,x) at " + wtn({{"x", x}, {"y", y}}), {x, y});
      for (int z = 0; z < n; ++z) {
        if (!sq_224(s, x, y, z))
          emit("2.2.4", tag + "(y*z)*R2(x,z) != (y*x)*R1(x,z) at " + wtn({{"x", x}, {"y", y}, {"z", z}}), {x, y, z});
        if (!sq_227(s, x, y, z))
          emit("2.2.7", tag + "R1(x*y,z)*y != R1(x,z*y) at " + wtn({{"x", x}, {"y", y}, {"z", z}}), {x, y, z});
        if (!sq_228(s, x, y, z))
          emit("2.2.8", tag + "R2(x*y,z) != R2(x,z*y)*y at " + wtn({{"x", x}, {"y", y}, {"z", z}}), {x, y, z});
      }
    }
}

int op_index_of(const GFamily& f, int g, int x, int y) { return f.op(g).at(x, y); }

}  // namespace

std::string AxiomReport::summary() const {
  std::ostringstream os;
  if (passed())
    os << "PASS (all " << families_checked << " axiom families)";
  else
    os << "FAIL (" << violations.size() << " violation" << (violations.size() == 1 ? "" : "s") << ")";
  return os.str();
}

AxiomReport check_quandle(const OperationTable& op) {
  AxiomReport rep;
  rep.families_checked = 3;
  Emitter emit{rep};
  int n = op.order();
  for (int x = 0; x < n; ++x)
    if (op.at(x, x) != x)
      emit("idempotency", "x*x != x at " + wtn({{"x", x}}), {x});
  for (int y = 0; y < n; ++y)
    for (int x1 = 0; x1 < n; ++x1)
      for (int x2 = x1 + 1; x2 < n; ++x2)
        if (op.at(x1, y) == op.at(x2, y))
          emit("right-invertibility", "column not injective: x1*y == x2*y at " + wtn({{"y", y}, {"x1", x1}, {"x2", x2}}),
               {y, x1, x2});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (op.at(op.at(x, y), z) != op.at(op.at(x, z), op.at(y, z)))
          emit("distributivity", "(x*y)*z != (x*z)*(y*z) at " + wtn({{"x", x}, {"y", y}, {"z", z}}), {x, y, z});
  return rep;
}

AxiomReport check_involutive_quandle(const OperationTable& op) {
  AxiomReport rep;
  rep.families_checked = 3;
  Emitter emit{rep};
  int n = op.order();
  for (int x = 0; x < n; ++x)
    if (op.at(x, x) != x)
      emit("idempotency", "x*x != x at " + wtn({{"x", x}}), {x});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (op.at(op.at(x, y), y) != x)
        emit("involution", "(x*y)*y != x at " + wtn({{"x", x}, {"y", y}}), {x, y});
      for (int z = 0; z < n; ++z)
        if (op.at(op.at(x, y), z) != op.at(op.at(x, z), op.at(y, z)))
          emit("distributivity", "(x*y)*z != (x*z)*(y*z) at " + wtn({{"x", x}, {"y", y}, {"z", z}}), {x, y, z});
    }
  return rep;
}

AxiomReport check_singquandle(const OperationTable& op, const OperationTable& r1, const OperationTable& r2,
                              const CheckOptions& opts) {
  if (r1.order() != op.order() || r2.order() != op.order())
    throw StructureError("singquandle tables must share one order");
  AxiomReport rep;
  rep.families_checked = opts.strict_223 ? 9 : 8;
  Emitter emit{rep};
  check_quandle_premise(op, "", emit);
  check_singular_layer({op, r1, r2}, "", opts.strict_223, emit);
  return rep;
}

AxiomReport check_disingquandle(const DisingquandleTable& d, const CheckOptions& opts) {
  AxiomReport rep;
  rep.families_checked = opts.strict_223 ? 15 : 14;
  Emitter emit{rep};
  check_quandle_premise(d.op1, "op1: ", emit);
  check_quandle_premise(d.op2, "op2: ", emit);
  check_singular_layer({d.op1, d.r1, d.r2}, "op1: ", opts.strict_223, emit);
  check_singular_layer({d.op2, d.r1, d.r2}, "op2: ", opts.strict_223, emit);

  int n = d.order();
  const auto &a = d.op1, &b = d.op2, &r1 = d.r1, &r2 = d.r2;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int w1 = a.at(y, x), w2 = b.at(y, x);
      if (r2.at(x, y) != b.at(r1.at(w1, x), r2.at(w1, x)))
        emit("4.2.5", "R2(x,y) != R1(y*1x,x) *2 R2(y*1x,x) at " + wtn({{"x", x}, {"y", y}}), {x, y});
      if (r2.at(x, y) != a.at(r1.at(w2, x), r2.at(w2, x)))
        emit("4.2.6", "R2(x,y) != R1(y*2x,x) *1 R2(y*2x,x) at " + wtn({{"x", x}, {"y", y}}), {x, y});
      for (int z = 0; z < n; ++z) {
        if (b.at(a.at(x, y), z) != a.at(b.at(x, z), b.at(y, z)))
          emit("4.2.1", "(x*1y)*2z != (x*2z)*1(y*2z) at " + wtn({{"x", x}, {"y", y}, {"z", z}}), {x, y, z});
        if (a.at(b.at(x, y), z) != b.at(a.at(x, z), a.at(y, z)))
          emit("4.2.2", "(x*2y)*1z != (x*1z)*2(y*1z) at " + wtn({{"x", x}, {"y", y}, {"z", z}}), {x, y, z});
        if (b.at(a.at(y, z), r2.at(x, z)) != a.at(b.at(y, x), r1.at(x, z)))
          emit("4.2.3", "(y*1z)*2R2(x,z) != (y*2x)*1R1(x,z) at " + wtn({{"x", x}, {"y", y}, {"z", z}}), {x, y, z});
        if (a.at(b.at(y, z), r2.at(x, z)) != b.at(a.at(y, x), r1.at(x, z)))
          emit("4.2.4", "(y*2z)*1R2(x,z) != (y*1x)*2R1(x,z) at " + wtn({{"x", x}, {"y", y}, {"z", z}}), {x, y, z});
      }
    }
  return rep;
}

AxiomReport check_g_family(const GFamily& f, const CheckOptions& opts) {
  AxiomReport rep;
  rep.families_checked = 4;
  Emitter emit{rep};
  const Group& G = f.group();
  int m = G.order(), n = f.set_order(), e = G.identity();

  for (int g = 0; g < m; ++g)
    for (int x = 0; x < n; ++x)
      if (op_index_of(f, g, x, x) != x)
        emit("gfam-1", "x *^g x != x at " + wtn({{"g", g}, {"x", x}}), {g, x});

  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (op_index_of(f, h, op_index_of(f, g, x, y), y) != op_index_of(f, G.mul(g, h), x, y))
            emit("gfam-2", "(x*^g y)*^h y != x*^{gh} y at " + wtn({{"g", g}, {"h", h}, {"x", x}, {"y", y}}),
                 {g, h, x, y});

  if (opts.strict_gfam) {
    for (int x = 0; x < n; ++x)
      if (op_index_of(f, e, x, x) != x)
        emit("gfam-3", "x *^e x != x at " + wtn({{"x", x}}), {x, x});
  } else {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (op_index_of(f, e, x, y) != x)
          emit("gfam-3", "x *^e y != x at " + wtn({{"x", x}, {"y", y}}), {x, y});
  }

  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h) {
      int conj = G.mul(G.mul(G.inverse(h), g), h);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (op_index_of(f, h, op_index_of(f, g, x, y), z) !=
                op_index_of(f, conj, op_index_of(f, h, x, z), op_index_of(f, h, y, z)))
              emit("gfam-4", "(x*^g y)*^h z != (x*^h z)*^{h^-1gh}(y*^h z) at " +
                                 wtn({{"g", g}, {"h", h}, {"x", x}, {"y", y}, {"z", z}}),
                   {g, h, x, y, z});
    }
  return rep;
}

bool disingquandle_valid(const DisingquandleTable& d, const CheckOptions& opts) {
  int n = d.order();
  const auto &a = d.op1, &b = d.op2, &r1 = d.r1, &r2 = d.r2;
  for (const OperationTable* op : {&a, &b}) {
    Sing s{*op, r1, r2};
    for (int x = 0; x < n; ++x) {
      if (op->at(x, x) != x)
        return false;
      for (int y = 0; y < n; ++y) {
        if (op->at(op->at(x, y), y) != x)
          return false;
        if (!sq_221(s, x, y, opts.strict_223) || !sq_222(s, x, y, opts.strict_223))
          return false;
        if (opts.strict_223 && !sq_223(s, x, y))
          return false;
        if (!sq_225(s, x, y) || !sq_226(s, x, y))
          return false;
        for (int z = 0; z < n; ++z) {
          if (op->at(op->at(x, y), z) != op->at(op->at(x, z), op->at(y, z)))
            return false;
          if (!sq_224(s, x, y, z) || !sq_227(s, x, y, z) || !sq_228(s, x, y, z))
            return false;
        }
      }
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int w1 = a.at(y, x), w2 = b.at(y, x);
      if (r2.at(x, y) != b.at(r1.at(w1, x), r2.at(w1, x)))
        return false;
      if (r2.at(x, y) != a.at(r1.at(w2, x), r2.at(w2, x)))
        return false;
      for (int z = 0; z < n; ++z) {
        if (b.at(a.at(x, y), z) != a.at(b.at(x, z), b.at(y, z)))
          return false;
        if (a.at(b.at(x, y), z) != b.at(a.at(x, z), a.at(y, z)))
          return false;
        if (b.at(a.at(y, z), r2.at(x, z)) != a.at(b.at(y, x), r1.at(x, z)))
          return false;
        if (a.at(b.at(y, z), r2.at(x, z)) != b.at(a.at(y, x), r1.at(x, z)))
          return false;
      }
    }
  return true;
}

OperationTable induced_quandle(const GFamily& f) {
  const Group& G = f.group();
  int m = G.order(), n = f.set_order();
  int N = m * n;
  auto table = OperationTable::from_fn(N, [&](int p, int q) {
    int g = p / n, x = p % n;
    int h = q / n, y = q % n;
    int conj = G.mul(G.mul(G.inverse(h), g), h);
    return conj * n + op_index_of(f, h, x, y);
  });
  AxiomReport rep = check_quandle(table);
  if (!rep.passed())
    throw InvalidStructure("induced operation on G x X is not a quandle", std::move(rep));
  return table;
}

bool axiom_holds_at(const OperationTable& op, const Violation& v) {
  const auto& w = v.witness;
  if (v.axiom == "idempotency")
    return op.at(w[0], w[0]) == w[0];
  if (v.axiom == "involution")
    return op.at(op.at(w[0], w[1]), w[1]) == w[0];
  if (v.axiom == "distributivity")
    return op.at(op.at(w[0], w[1]), w[2]) == op.at(op.at(w[0], w[2]), op.at(w[1], w[2]));
  if (v.axiom == "right-invertibility")
    return op.at(w[1], w[0]) != op.at(w[2], w[0]);
  throw StructureError("unknown quandle axiom id: " + v.axiom);
}

bool axiom_holds_at(const OperationTable& op, const OperationTable& r1, const OperationTable& r2, const Violation& v,
                    const CheckOptions& opts) {
  Sing s{op, r1, r2};
  const auto& w = v.witness;
  if (v.axiom == "quandle")
    return involutive_quandle_at(op, w[0], w[1], w[2]);
  if (v.axiom == "2.2.1")
    return sq_221(s, w[0], w[1], opts.strict_223);
  if (v.axiom == "2.2.2")
    return sq_222(s, w[0], w[1], opts.strict_223);
  if (v.axiom == "2.2.3")
    return sq_223(s, w[0], w[1]);
  if (v.axiom == "2.2.4")
    return sq_224(s, w[0], w[1], w[2]);
  if (v.axiom == "2.2.5")
    return sq_225(s, w[0], w[1]);
  if (v.axiom == "2.2.6")
    return sq_226(s, w[0], w[1]);
  if (v.axiom == "2.2.7")
    return sq_227(s, w[0], w[1], w[2]);
  if (v.axiom == "2.2.8")
    return sq_228(s, w[0], w[1], w[2]);
  throw StructureError("unknown singquandle axiom id: " + v.axiom);
}

bool axiom_holds_at(const DisingquandleTable& d, const Violation& v, const CheckOptions& opts) {
  const auto& w = v.witness;
  const auto &a = d.op1, &b = d.op2, &r1 = d.r1, &r2 = d.r2;
  if (v.axiom == "quandle")
    return involutive_quandle_at(a, w[0], w[1], w[2]) && involutive_quandle_at(b, w[0], w[1], w[2]);
  if (v.axiom.rfind("2.2", 0) == 0)
    return axiom_holds_at(a, r1, r2, v, opts) && axiom_holds_at(b, r1, r2, v, opts);
  if (v.axiom == "4.2.1")
    return b.at(a.at(w[0], w[1]), w[2]) == a.at(b.at(w[0], w[2]), b.at(w[1], w[2]));
  if (v.axiom == "4.2.2")
    return a.at(b.at(w[0], w[1]), w[2]) == b.at(a.at(w[0], w[2]), a.at(w[1], w[2]));
  if (v.axiom == "4.2.3")
    return b.at(a.at(w[1], w[2]), r2.at(w[0], w[2])) == a.at(b.at(w[1], w[0]), r1.at(w[0], w[2]));
  if (v.axiom == "4.2.4")
    return a.at(b.at(w[1], w[2]), r2.at(w[0], w[2])) == b.at(a.at(w[1], w[0]), r1.at(w[0], w[2]));
  if (v.axiom == "4.2.5") {
    int w1 = a.at(w[1], w[0]);
    return r2.at(w[0], w[1]) == b.at(r1.at(w1, w[0]), r2.at(w1, w[0]));
  }
  if (v.axiom == "4.2.6") {
    int w2 = b.at(w[1], w[0]);
    return r2.at(w[0], w[1]) == a.at(r1.at(w2, w[0]), r2.at(w2, w[0]));
  }
  throw StructureError("unknown disingquandle axiom id: " + v.axiom);
}

bool axiom_holds_at(const GFamily& f, const Violation& v, const CheckOptions& opts) {
  const Group& G = f.group();
  const auto& w = v.witness;
  if (v.axiom == "gfam-1")
    return op_index_of(f, w[0], w[1], w[1]) == w[1];
  if (v.axiom == "gfam-2")
    return op_index_of(f, w[1], op_index_of(f, w[0], w[2], w[3]), w[3]) ==
           op_index_of(f, G.mul(w[0], w[1]), w[2], w[3]);
  if (v.axiom == "gfam-3") {
    int e = G.identity();
    return opts.strict_gfam ? op_index_of(f, e, w[0], w[0]) == w[0] : op_index_of(f, e, w[0], w[1]) == w[0];
  }
  if (v.axiom == "gfam-4") {
    int conj = G.mul(G.mul(G.inverse(w[1]), w[0]), w[1]);
    return op_index_of(f, w[1], op_index_of(f, w[0], w[2], w[3]), w[4]) ==
           op_index_of(f, conj, op_index_of(f, w[1], w[2], w[4]), op_index_of(f, w[1], w[3], w[4]));
  }
  throw StructureError("unknown gfamily axiom id: " + v.axiom);
}

}  // namespace dsq
