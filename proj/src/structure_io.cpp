#include "dsq/structure_io.hpp"

#include <fstream>
#include <sstream>

namespace dsq {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Strips '#' comments and blank lines, keeping 1-based line numbers.
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

class Cursor {
public:
  explicit Cursor(const std::vector<Line>& lines) : lines_(lines) {}

  const Line& expect_line(const std::string& what) {
    if (pos_ >= lines_.size())
      throw ParseError(last_line_ + 1, "unexpected end of input, expected " + what);
    last_line_ = lines_[pos_].number;
    return lines_[pos_++];
  }

  const Line& expect_keyword(const std::string& kw) {
    const Line& l = expect_line("'" + kw + "'");
    if (l.tokens[0] != kw)
      throw ParseError(l.number, "expected '" + kw + "', found '" + l.tokens[0] + "'");
    return l;
  }

  int last_line() const { return last_line_; }
  bool done() const { return pos_ >= lines_.size(); }

private:
  const std::vector<Line>& lines_;
  size_t pos_ = 0;
  int last_line_ = 0;
};

int parse_int(const Line& l, const std::string& tok, const std::string& what) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size())
      throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(l.number, "expected " + what + ", found '" + tok + "'");
  }
}

OperationTable read_table(Cursor& cur, int n, const std::string& what) {
  std::vector<int> entries;
  entries.reserve(static_cast<size_t>(n) * n);
  for (int row = 0; row < n; ++row) {
    const Line& l = cur.expect_line("row " + std::to_string(row) + " of " + what);
    if (static_cast<int>(l.tokens.size()) != n)
      throw ParseError(l.number, what + " row must have " + std::to_string(n) + " entries");
    for (const auto& t : l.tokens) {
      int v = parse_int(l, t, "a table entry");
      if (v < 0 || v >= n)
        throw ParseError(l.number, "table entry " + t + " out of range 0.." + std::to_string(n - 1));
      entries.push_back(v);
    }
  }
  return OperationTable(n, std::move(entries));
}

DisingquandleTable parse_disingquandle(Cursor& cur) {
  const Line& head = cur.expect_keyword("disingquandle");
  if (head.tokens.size() != 2)
    throw ParseError(head.number, "expected 'disingquandle <name>'");
  std::string name = head.tokens[1];

  const Line& ol = cur.expect_keyword("order");
  if (ol.tokens.size() != 2)
    throw ParseError(ol.number, "expected 'order <n>'");
  int n = parse_int(ol, ol.tokens[1], "the order");
  if (n < 1)
    throw ParseError(ol.number, "order must be positive");

  cur.expect_keyword("op1");
  OperationTable op1 = read_table(cur, n, "op1");
  cur.expect_keyword("op2");
  OperationTable op2 = read_table(cur, n, "op2");
  cur.expect_keyword("r1");
  OperationTable r1 = read_table(cur, n, "r1");
  cur.expect_keyword("r2");
  OperationTable r2 = read_table(cur, n, "r2");
  cur.expect_keyword("end");
  return DisingquandleTable(std::move(name), std::move(op1), std::move(op2), std::move(r1), std::move(r2));
}

GFamily parse_gfamily(Cursor& cur) {
  const Line& head = cur.expect_keyword("gfamily");
  if (head.tokens.size() != 2)
    throw ParseError(head.number, "expected 'gfamily <name>'");
  std::string name = head.tokens[1];

  const Line& gl = cur.expect_keyword("group-order");
  if (gl.tokens.size() != 2)
    throw ParseError(gl.number, "expected 'group-order <m>'");
  int m = parse_int(gl, gl.tokens[1], "the group order");
  if (m < 1)
    throw ParseError(gl.number, "group order must be positive");

  cur.expect_keyword("mult");
  OperationTable mult = read_table(cur, m, "mult");

  const Line& sl = cur.expect_keyword("set-order");
  if (sl.tokens.size() != 2)
    throw ParseError(sl.number, "expected 'set-order <n>'");
  int n = parse_int(sl, sl.tokens[1], "the set order");
  if (n < 1)
    throw ParseError(sl.number, "set order must be positive");

  std::vector<OperationTable> ops;
  ops.reserve(m);
  for (int g = 0; g < m; ++g) {
    const Line& opl = cur.expect_keyword("op");
    if (opl.tokens.size() != 2 || parse_int(opl, opl.tokens[1], "a group element") != g)
      throw ParseError(opl.number, "expected 'op " + std::to_string(g) + "'");
    ops.push_back(read_table(cur, n, "op " + std::to_string(g)));
  }
  cur.expect_keyword("end");

  Group group(m, mult.entries());  // verifies the group axioms
  return GFamily(std::move(name), std::move(group), n, std::move(ops));
}

}  // namespace

ParsedStructure parse_structure_text(const std::string& text) {
  auto lines = tokenize(text);
  Cursor cur(lines);
  if (lines.empty())
    throw ParseError(1, "empty structure file");
  const std::string& kw = lines.front().tokens[0];
  if (kw == "disingquandle") {
    auto d = parse_disingquandle(cur);
    if (!cur.done())
      throw ParseError(cur.last_line() + 1, "trailing content after 'end'");
    return d;
  }
  if (kw == "gfamily") {
    auto f = parse_gfamily(cur);
    if (!cur.done())
      throw ParseError(cur.last_line() + 1, "trailing content after 'end'");
    return f;
  }
  throw ParseError(lines.front().number, "expected 'disingquandle' or 'gfamily', found '" + kw + "'");
}

DisingquandleTable parse_disingquandle_text(const std::string& text) {
  auto parsed = parse_structure_text(text);
  if (auto* d = std::get_if<DisingquandleTable>(&parsed))
    return *d;
  throw ParseError(1, "expected a disingquandle file, found a gfamily");
}

ParsedStructure load_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open structure file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_structure_text(ss.str());
}

namespace {

void write_table(std::ostream& os, const OperationTable& t) {
  int n = t.order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      os << (y ? " " : "") << t.at(x, y);
    os << "\n";
  }
}

}  // namespace

std::string serialize(const DisingquandleTable& d) {
  std::ostringstream os;
  os << "disingquandle " << d.name << "\n";
  os << "order " << d.order() << "\n";
  os << "op1\n";
  write_table(os, d.op1);
  os << "op2\n";
  write_table(os, d.op2);
  os << "r1\n";
  write_table(os, d.r1);
  os << "r2\n";
  write_table(os, d.r2);
  os << "end\n";
  return os.str();
}

std::string serialize(const GFamily& f) {
  std::ostringstream os;
  os << "gfamily " << f.name() << "\n";
  os << "group-order " << f.group().order() << "\n";
  os << "mult\n";
  int m = f.group().order();
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b)
      os << (b ? " " : "") << f.group().mul(a, b);
    os << "\n";
  }
  os << "set-order " << f.set_order() << "\n";
  for (int g = 0; g < m; ++g) {
    os << "op " << g << "\n";
    write_table(os, f.op(g));
  }
  os << "end\n";
  return os.str();
}

}  // namespace dsq
