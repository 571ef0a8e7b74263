#include "dsq/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "dsq/structure_io.hpp"

namespace dsq {

bool Diagram::has_arc(const std::string& id) const {
  for (const auto& [aid, _] : arcs)
    if (aid == id)
      return true;
  return false;
}

const std::string& Diagram::component_of(const std::string& arc) const {
  for (const auto& [aid, cid] : arcs)
    if (aid == arc)
      return cid;
  throw StructureError("unknown arc id: " + arc);
}

int Diagram::label_of_component(const std::string& component) const {
  for (const auto& [cid, label] : components)
    if (cid == component)
      return label;
  throw StructureError("unknown component id: " + component);
}

bool Diagram::is_loop(const std::string& component) const {
  return std::find(loops.begin(), loops.end(), component) != loops.end();
}

namespace {

// End-slot pairings induced by strand continuity; each terminating slot
// occurrence is one arc end.
struct Ends {
  std::map<std::string, int> terminating;            // arc -> slot count
  std::vector<std::pair<std::string, std::string>> connections;
};

Ends collect_ends(const Diagram& d) {
  Ends e;
  for (const auto& [aid, _] : d.arcs)
    e.terminating[aid] = 0;
  auto touch = [&](const std::string& a) {
    auto it = e.terminating.find(a);
    if (it != e.terminating.end())
      ++it->second;
  };
  for (const auto& c : d.classical) {
    touch(c.under_in);
    touch(c.under_out);
    e.connections.emplace_back(c.under_in, c.under_out);
  }
  for (const auto& s : d.singular) {
    touch(s.in1);
    touch(s.in2);
    touch(s.out1);
    touch(s.out2);
    e.connections.emplace_back(s.in1, s.out2);
    e.connections.emplace_back(s.in2, s.out1);
  }
  return e;
}

}  // namespace

ValidationReport validate_diagram(const Diagram& d) {
  ValidationReport rep;
  auto issue = [&](std::string code, std::string msg) { rep.issues.push_back({std::move(code), std::move(msg)}); };

  std::set<std::string> comp_ids, arc_ids;
  for (const auto& [cid, label] : d.components) {
    if (!comp_ids.insert(cid).second)
      issue("dup-component", "component declared twice: " + cid);
    if (label != 1 && label != 2)
      issue("bad-label", "component " + cid + " has label outside {1,2}");
  }
  for (const auto& [aid, cid] : d.arcs) {
    if (!arc_ids.insert(aid).second)
      issue("dup-arc", "arc declared twice: " + aid);
    if (!comp_ids.count(cid))
      issue("unknown-component", "arc " + aid + " references undeclared component " + cid);
  }
  auto check_arc = [&](const std::string& a, const char* where) {
    if (!arc_ids.count(a))
      issue("unknown-arc", std::string("crossing slot ") + where + " references undeclared arc " + a);
  };
  for (const auto& c : d.classical) {
    check_arc(c.over, "over");
    check_arc(c.under_in, "under-in");
    check_arc(c.under_out, "under-out");
  }
  for (const auto& s : d.singular) {
    check_arc(s.in1, "in1");
    check_arc(s.in2, "in2");
    check_arc(s.out1, "out1");
    check_arc(s.out2, "out2");
  }
  for (const auto& l : d.loops)
    if (!comp_ids.count(l))
      issue("unknown-component", "loop line references undeclared component " + l);
  if (!rep.ok())
    return rep;  // id-level problems make the structural checks meaningless

  std::set<std::string> loop_set(d.loops.begin(), d.loops.end());
  Ends ends = collect_ends(d);

  std::map<std::string, std::vector<std::string>> comp_arcs;
  for (const auto& [aid, cid] : d.arcs)
    comp_arcs[cid].push_back(aid);

  for (const auto& [cid, label] : d.components) {
    auto it = comp_arcs.find(cid);
    if (it == comp_arcs.end()) {
      issue("empty-component", "component " + cid + " has no arcs");
      continue;
    }
    if (loop_set.count(cid)) {
      if (it->second.size() != 1)
        issue("loop-arcs", "free loop " + cid + " must have exactly one arc");
      for (const auto& a : it->second)
        if (ends.terminating[a] != 0)
          issue("loop-terminated", "arc " + a + " of free loop " + cid + " appears in a terminating slot");
    }
  }

  for (const auto& [aid, cid] : d.arcs) {
    if (loop_set.count(cid))
      continue;
    if (ends.terminating[aid] != 2)
      issue("arc-ends", "arc " + aid + " appears " + std::to_string(ends.terminating[aid]) +
                            " times in terminating slots (expected 2)");
  }
  if (!rep.ok())
    return rep;

  // Strand tracing: arcs are vertices, continuity pairings are edges. Every
  // non-loop arc has degree exactly 2 (a self-pairing counts twice), so the
  // edges decompose into closed walks; each walk must stay inside one
  // component and each non-loop component must be a single walk.
  std::map<std::string, std::vector<int>> adj;
  for (size_t i = 0; i < ends.connections.size(); ++i) {
    adj[ends.connections[i].first].push_back(static_cast<int>(i));
    adj[ends.connections[i].second].push_back(static_cast<int>(i));  // self-loop lands twice
  }
  std::vector<char> used(ends.connections.size(), 0);
  std::map<std::string, int> cycles_per_component;
  for (size_t start = 0; start < ends.connections.size(); ++start) {
    if (used[start])
      continue;
    std::set<std::string> cycle_arcs;
    used[start] = 1;
    cycle_arcs.insert(ends.connections[start].first);
    cycle_arcs.insert(ends.connections[start].second);
    std::string cur = ends.connections[start].second;
    for (;;) {
      int next_edge = -1;
      for (int e2 : adj[cur])
        if (!used[e2]) {
          next_edge = e2;
          break;
        }
      if (next_edge == -1)
        break;
      used[next_edge] = 1;
      const auto& [u, v] = ends.connections[next_edge];
      cur = (u == cur) ? v : u;
      cycle_arcs.insert(u);
      cycle_arcs.insert(v);
    }
    std::set<std::string> comps;
    for (const auto& a : cycle_arcs)
      comps.insert(d.component_of(a));
    if (comps.size() > 1) {
      std::string list;
      for (const auto& c : comps)
        list += (list.empty() ? "" : ",") + c;
      issue("trace-mixed-components",
            "strand cycle through arc " + ends.connections[start].first + " spans components " + list);
    }
    for (const auto& c : comps)
      ++cycles_per_component[c];
  }
  for (const auto& [cid, label] : d.components) {
    if (loop_set.count(cid))
      continue;
    int cycles = cycles_per_component.count(cid) ? cycles_per_component[cid] : 0;
    if (cycles != 1)
      issue("trace-cycles",
            "component " + cid + " splits into " + std::to_string(cycles) + " strand cycles (expected 1)");
  }
  return rep;
}

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos)
      raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok)
      tokens.push_back(tok);
    if (!tokens.empty())
      lines.push_back({number, std::move(tokens)});
  }
  return lines;
}

}  // namespace

Diagram parse_diagram_text(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty())
    throw ParseError(1, "empty link file");

  Diagram d;
  size_t i = 0;
  const Line& head = lines[i++];
  if (head.tokens[0] != "link" || head.tokens.size() != 2)
    throw ParseError(head.number, "expected 'link <name>'");
  d.name = head.tokens[1];

  std::set<std::string> comp_ids, arc_ids;
  bool ended = false;
  for (; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const auto& t = l.tokens;
    const std::string& kw = t[0];
    auto need_arc = [&](const std::string& a) {
      if (!arc_ids.count(a))
        throw ParseError(l.number, "undeclared arc '" + a + "'");
    };
    if (kw == "component") {
      if (t.size() != 4 || t[2] != "label")
        throw ParseError(l.number, "expected 'component <cid> label <1|2>'");
      if (t[3] != "1" && t[3] != "2")
        throw ParseError(l.number, "label must be 1 or 2");
      if (!comp_ids.insert(t[1]).second)
        throw ParseError(l.number, "component '" + t[1] + "' declared twice");
      d.components.emplace_back(t[1], t[3] == "1" ? 1 : 2);
    } else if (kw == "arc") {
      if (t.size() != 4 || t[2] != "component")
        throw ParseError(l.number, "expected 'arc <aid> component <cid>'");
      if (!comp_ids.count(t[3]))
        throw ParseError(l.number, "undeclared component '" + t[3] + "'");
      if (!arc_ids.insert(t[1]).second)
        throw ParseError(l.number, "arc '" + t[1] + "' declared twice");
      d.arcs.emplace_back(t[1], t[3]);
    } else if (kw == "xc") {
      if (t.size() != 4)
        throw ParseError(l.number, "expected 'xc <over> <under-in> <under-out>'");
      need_arc(t[1]);
      need_arc(t[2]);
      need_arc(t[3]);
      d.classical.push_back({t[1], t[2], t[3]});
    } else if (kw == "xs") {
      if (t.size() != 5)
        throw ParseError(l.number, "expected 'xs <in1> <in2> <out1> <out2>'");
      for (int k = 1; k <= 4; ++k)
        need_arc(t[k]);
      d.singular.push_back({t[1], t[2], t[3], t[4]});
    } else if (kw == "loop") {
      if (t.size() != 2)
        throw ParseError(l.number, "expected 'loop <cid>'");
      if (!comp_ids.count(t[1]))
        throw ParseError(l.number, "undeclared component '" + t[1] + "'");
      d.loops.push_back(t[1]);
    } else if (kw == "end") {
      ended = true;
      if (i + 1 != lines.size())
        throw ParseError(lines[i + 1].number, "trailing content after 'end'");
      break;
    } else {
      throw ParseError(l.number, "unknown keyword '" + kw + "'");
    }
  }
  if (!ended)
    throw ParseError(lines.back().number + 1, "missing 'end'");

  ValidationReport rep = validate_diagram(d);
  if (!rep.ok())
    throw InvalidDiagram("link file describes an invalid diagram: " + rep.issues.front().message, std::move(rep));
  return d;
}

Diagram load_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open link file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_diagram_text(ss.str());
}

std::string serialize(const Diagram& d) {
  std::ostringstream os;
  os << "link " << d.name << "\n";
  for (const auto& [cid, label] : d.components)
    os << "component " << cid << " label " << label << "\n";
  for (const auto& [aid, cid] : d.arcs)
    os << "arc " << aid << " component " << cid << "\n";
  for (const auto& c : d.classical)
    os << "xc " << c.over << " " << c.under_in << " " << c.under_out << "\n";
  for (const auto& s : d.singular)
    os << "xs " << s.in1 << " " << s.in2 << " " << s.out1 << " " << s.out2 << "\n";
  for (const auto& l : d.loops)
    os << "loop " << l << "\n";
  os << "end\n";
  return os.str();
}

namespace {

std::string fresh_arc_id(const Diagram& d, std::string base) {
  while (d.has_arc(base))
    base += "'";
  return base;
}

// The two terminating slot occurrences of an arc, in crossing scan order.
// Returns pointers into the copied diagram.
std::vector<std::string*> terminating_slots(Diagram& d, const std::string& arc) {
  std::vector<std::string*> slots;
  for (auto& c : d.classical) {
    if (c.under_in == arc)
      slots.push_back(&c.under_in);
    if (c.under_out == arc)
      slots.push_back(&c.under_out);
  }
  for (auto& s : d.singular) {
    if (s.in1 == arc)
      slots.push_back(&s.in1);
    if (s.in2 == arc)
      slots.push_back(&s.in2);
    if (s.out1 == arc)
      slots.push_back(&s.out1);
    if (s.out2 == arc)
      slots.push_back(&s.out2);
  }
  return slots;
}

void insert_arc_after(Diagram& d, const std::string& after, const std::string& id, const std::string& comp) {
  for (auto it = d.arcs.begin(); it != d.arcs.end(); ++it)
    if (it->first == after) {
      d.arcs.insert(it + 1, {id, comp});
      return;
    }
  d.arcs.emplace_back(id, comp);
}

void unmark_loop(Diagram& d, const std::string& comp) {
  d.loops.erase(std::remove(d.loops.begin(), d.loops.end(), comp), d.loops.end());
}

Diagram finish(Diagram d) {
  ValidationReport rep = validate_diagram(d);
  if (!rep.ok())
    throw InvalidDiagram("rewrite produced an invalid diagram: " + rep.issues.front().message, std::move(rep));
  return d;
}

}  // namespace

Diagram apply_kink(const Diagram& d, const std::string& arc) {
  if (!d.has_arc(arc))
    throw StructureError("apply_kink: unknown arc " + arc);
  Diagram out = d;
  const std::string comp = out.component_of(arc);
  if (out.is_loop(comp)) {
    unmark_loop(out, comp);
    out.classical.push_back({arc, arc, arc});
    return finish(std::move(out));
  }
  auto slots = terminating_slots(out, arc);
  std::string tail = fresh_arc_id(out, arc + "k");
  *slots.at(1) = tail;  // second end moves to the new arc
  insert_arc_after(out, arc, tail, comp);
  out.classical.push_back({arc, arc, tail});
  return finish(std::move(out));
}

Diagram apply_poke(const Diagram& d, const std::string& arc_a, const std::string& arc_b) {
  if (!d.has_arc(arc_a))
    throw StructureError("apply_poke: unknown arc " + arc_a);
  if (!d.has_arc(arc_b))
    throw StructureError("apply_poke: unknown arc " + arc_b);
  if (arc_a == arc_b)
    throw StructureError("apply_poke needs two distinct arcs");
  Diagram out = d;
  const std::string comp = out.component_of(arc_a);
  if (out.is_loop(comp)) {
    unmark_loop(out, comp);
    std::string mid = fresh_arc_id(out, arc_a + "p");
    insert_arc_after(out, arc_a, mid, comp);
    out.classical.push_back({arc_b, arc_a, mid});
    out.classical.push_back({arc_b, mid, arc_a});
    return finish(std::move(out));
  }
  auto slots = terminating_slots(out, arc_a);
  std::string mid = fresh_arc_id(out, arc_a + "p");
  std::string tail = fresh_arc_id(out, mid + "p");
  *slots.at(1) = tail;
  insert_arc_after(out, arc_a, mid, comp);
  insert_arc_after(out, mid, tail, comp);
  out.classical.push_back({arc_b, arc_a, mid});
  out.classical.push_back({arc_b, mid, tail});
  return finish(std::move(out));
}

Diagram swap_labels(const Diagram& d) {
  Diagram out = d;
  out.name = d.name + "-swapped";
  for (auto& [cid, label] : out.components)
    label = 3 - label;
  return out;
}

}  // namespace dsq
