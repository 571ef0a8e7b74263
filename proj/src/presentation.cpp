#include "dsq/presentation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "dsq/parallel.hpp"

namespace dsq {

TermPtr Term::make_var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Var;
  t->var = std::move(name);
  return t;
}

TermPtr Term::make(Kind k, TermPtr l, TermPtr r) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b)
    return true;
  if (a->kind != b->kind)
    return false;
  if (a->kind == Term::Kind::Var)
    return a->var == b->var;
  return term_equal(a->left, b->left) && term_equal(a->right, b->right);
}

bool term_contains(const TermPtr& t, const std::string& var) {
  if (t->kind == Term::Kind::Var)
    return t->var == var;
  return term_contains(t->left, var) || term_contains(t->right, var);
}

TermPtr term_substitute(const TermPtr& t, const std::string& var, const TermPtr& replacement) {
  if (t->kind == Term::Kind::Var)
    return t->var == var ? replacement : t;
  TermPtr l = term_substitute(t->left, var, replacement);
  TermPtr r = term_substitute(t->right, var, replacement);
  if (l == t->left && r == t->right)
    return t;
  return Term::make(t->kind, std::move(l), std::move(r));
}

namespace {

void render(const TermPtr& t, bool top, std::ostream& os) {
  switch (t->kind) {
    case Term::Kind::Var:
      os << t->var;
      return;
    case Term::Kind::R1:
    case Term::Kind::R2:
      os << (t->kind == Term::Kind::R1 ? "R1(" : "R2(");
      render(t->left, true, os);
      os << ", ";
      render(t->right, true, os);
      os << ")";
      return;
    case Term::Kind::Op1:
    case Term::Kind::Op2: {
      if (!top)
        os << "(";
      render(t->left, false, os);
      os << (t->kind == Term::Kind::Op1 ? " *1 " : " *2 ");
      render(t->right, false, os);
      if (!top)
        os << ")";
      return;
    }
  }
}

// Total order on terms, used to canonicalize relation sides for dedup.
int term_cmp(const TermPtr& a, const TermPtr& b) {
  if (a->kind != b->kind)
    return a->kind < b->kind ? -1 : 1;
  if (a->kind == Term::Kind::Var)
    return a->var.compare(b->var);
  if (int c = term_cmp(a->left, b->left))
    return c;
  return term_cmp(a->right, b->right);
}

}  // namespace

std::string term_to_string(const TermPtr& t) {
  std::ostringstream os;
  render(t, true, os);
  return os.str();
}

Presentation fundamental_presentation(const Diagram& d, bool simplify) {
  Presentation p;
  for (const auto& [aid, _] : d.arcs)
    p.generators.push_back(aid);

  for (const auto& c : d.classical) {
    auto kind = d.label_of_arc(c.over) == 1 ? Term::Kind::Op1 : Term::Kind::Op2;
    p.relations.push_back(
        {Term::make_var(c.under_out), Term::make(kind, Term::make_var(c.under_in), Term::make_var(c.over))});
  }
  for (const auto& s : d.singular) {
    p.relations.push_back(
        {Term::make_var(s.out1), Term::make(Term::Kind::R1, Term::make_var(s.in1), Term::make_var(s.in2))});
    p.relations.push_back(
        {Term::make_var(s.out2), Term::make(Term::Kind::R2, Term::make_var(s.in1), Term::make_var(s.in2))});
  }
  return simplify ? simplify_presentation(std::move(p)) : p;
}

Presentation simplify_presentation(Presentation p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < p.relations.size(); ++i) {
      const auto& rel = p.relations[i];
      std::string gen;
      TermPtr word;
      if (rel.lhs->kind == Term::Kind::Var && !term_contains(rel.rhs, rel.lhs->var)) {
        gen = rel.lhs->var;
        word = rel.rhs;
      } else if (rel.rhs->kind == Term::Kind::Var && !term_contains(rel.lhs, rel.rhs->var)) {
        gen = rel.rhs->var;
        word = rel.lhs;
      } else {
        continue;
      }
      p.relations.erase(p.relations.begin() + static_cast<long>(i));
      for (auto& other : p.relations) {
        other.lhs = term_substitute(other.lhs, gen, word);
        other.rhs = term_substitute(other.rhs, gen, word);
      }
      p.generators.erase(std::remove(p.generators.begin(), p.generators.end(), gen), p.generators.end());
      changed = true;
      break;
    }
  }

  // canonical side order, then drop trivial and duplicate relations
  for (auto& rel : p.relations)
    if (term_cmp(rel.lhs, rel.rhs) > 0)
      std::swap(rel.lhs, rel.rhs);
  std::vector<PresentationRelation> kept;
  for (auto& rel : p.relations) {
    if (term_equal(rel.lhs, rel.rhs))
      continue;
    bool dup = false;
    for (const auto& k : kept)
      dup = dup || (term_equal(k.lhs, rel.lhs) && term_equal(k.rhs, rel.rhs));
    if (!dup)
      kept.push_back(rel);
  }
  p.relations = std::move(kept);
  return p;
}

namespace {

struct TermEvaluator {
  const DisingquandleTable& X;
  const std::map<std::string, int>& index;
  const std::vector<int>& values;

  int eval(const TermPtr& t) const {
    switch (t->kind) {
      case Term::Kind::Var:
        return values[index.at(t->var)];
      case Term::Kind::Op1:
        return X.op1.at(eval(t->left), eval(t->right));
      case Term::Kind::Op2:
        return X.op2.at(eval(t->left), eval(t->right));
      case Term::Kind::R1:
        return X.r1.at(eval(t->left), eval(t->right));
      case Term::Kind::R2:
        return X.r2.at(eval(t->left), eval(t->right));
    }
    return -1;
  }
};

void collect_vars(const TermPtr& t, std::vector<std::string>& out) {
  if (t->kind == Term::Kind::Var) {
    out.push_back(t->var);
    return;
  }
  collect_vars(t->left, out);
  collect_vars(t->right, out);
}

}  // namespace

long long hom_count_via_presentation(const Presentation& p, const DisingquandleTable& X, int jobs,
                                     const CheckOptions& opts) {
  AxiomReport rep = check_disingquandle(X, opts);
  if (!rep.passed())
    throw InvalidStructure("hom counting needs a valid structure", std::move(rep));

  std::map<std::string, int> index;
  for (size_t i = 0; i < p.generators.size(); ++i)
    index[p.generators[i]] = static_cast<int>(i);

  // Relations become checkable at the highest generator they mention.
  std::vector<std::vector<int>> stage(p.generators.size());
  for (size_t r = 0; r < p.relations.size(); ++r) {
    std::vector<std::string> vars;
    collect_vars(p.relations[r].lhs, vars);
    collect_vars(p.relations[r].rhs, vars);
    int last = 0;
    for (const auto& v : vars) {
      auto it = index.find(v);
      if (it == index.end())
        throw StructureError("relation references unknown generator " + v);
      last = std::max(last, it->second);
    }
    if (!p.generators.empty())
      stage[last].push_back(static_cast<int>(r));
  }

  if (p.generators.empty())
    return 1;  // the empty assignment

  int n = X.order();
  struct Count {
    const Presentation& p;
    const DisingquandleTable& X;
    const std::map<std::string, int>& index;
    const std::vector<std::vector<int>>& stage;
    int n;
    std::vector<int> values;
    long long total = 0;

    bool ok(int s) {
      TermEvaluator ev{X, index, values};
      for (int r : stage[s])
        if (ev.eval(p.relations[r].lhs) != ev.eval(p.relations[r].rhs))
          return false;
      return true;
    }
    void rec(int s) {
      if (s == static_cast<int>(p.generators.size())) {
        ++total;
        return;
      }
      for (int v = 0; v < n; ++v) {
        values[s] = v;
        if (ok(s))
          rec(s + 1);
      }
    }
  };

  std::vector<long long> counts(n, 0);
  parallel_for(std::max(1, jobs), 0, n, [&](int first) {
    Count c{p, X, index, stage, n, std::vector<int>(p.generators.size(), 0), 0};
    c.values[0] = first;
    if (c.ok(0))
      c.rec(1);
    counts[first] = c.total;
  });
  long long total = 0;
  for (long long c : counts)
    total += c;
  return total;
}

std::string to_string(const Presentation& p) {
  std::ostringstream os;
  os << "generators:";
  for (const auto& g : p.generators)
    os << " " << g;
  os << "\n";
  for (const auto& rel : p.relations)
    os << "relation: " << term_to_string(rel.lhs) << " = " << term_to_string(rel.rhs) << "\n";
  return os.str();
}

}  // namespace dsq
