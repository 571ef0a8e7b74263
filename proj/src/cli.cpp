#include "dsq/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "dsq/builders.hpp"
#include "dsq/coloring.hpp"
#include "dsq/parallel.hpp"
#include "dsq/presentation.hpp"
#include "dsq/search.hpp"
#include "dsq/structure_io.hpp"
#include "dsq/version.hpp"

namespace dsq::cli {

namespace {

constexpr size_t kMaxPrintedViolations = 25;

void print_report(const AxiomReport& rep, std::ostream& out) {
  out << rep.summary() << "\n";
  size_t shown = 0;
  for (const auto& v : rep.violations) {
    if (shown++ == kMaxPrintedViolations) {
      out << "... (" << rep.violations.size() - kMaxPrintedViolations << " more)\n";
      break;
    }
    out << "violation axiom=" << v.axiom << " detail=" << v.detail << "\n";
  }
}

void print_issues(const ValidationReport& rep, std::ostream& out) {
  out << "INVALID\n";
  for (const auto& i : rep.issues)
    out << "issue code=" << i.code << " message=" << i.message << "\n";
}

int cmd_check_structure(const std::string& path, const CheckOptions& opts, std::ostream& out) {
  ParsedStructure parsed = load_structure_file(path);
  AxiomReport rep;
  if (const auto* d = std::get_if<DisingquandleTable>(&parsed)) {
    out << "structure=" << d->name << "\n";
    out << "kind=disingquandle\n";
    out << "order=" << d->order() << "\n";
    rep = check_disingquandle(*d, opts);
  } else {
    const auto& f = std::get<GFamily>(parsed);
    out << "structure=" << f.name() << "\n";
    out << "kind=gfamily\n";
    out << "group-order=" << f.group().order() << "\n";
    out << "set-order=" << f.set_order() << "\n";
    rep = check_g_family(f, opts);
  }
  print_report(rep, out);
  return rep.passed() ? 0 : 1;
}

int cmd_check_link(const std::string& path, std::ostream& out) {
  Diagram d = load_diagram_file(path);  // throws InvalidDiagram on bad structure
  out << "link=" << d.name << "\n";
  out << "components=" << d.components.size() << "\n";
  out << "arcs=" << d.arcs.size() << "\n";
  out << "classical=" << d.classical.size() << "\n";
  out << "singular=" << d.singular.size() << "\n";
  out << "loops=" << d.loops.size() << "\n";
  out << "VALID\n";
  return 0;
}

DisingquandleTable load_disingquandle(const std::string& path) {
  ParsedStructure parsed = load_structure_file(path);
  if (auto* d = std::get_if<DisingquandleTable>(&parsed))
    return *d;
  throw StructureError("this command needs a disingquandle structure file, found a gfamily");
}

int cmd_count(const std::string& structure_path, const std::string& link_path, bool list, const SolveOptions& opts,
              std::ostream& out) {
  DisingquandleTable X = load_disingquandle(structure_path);
  Diagram d = load_diagram_file(link_path);
  SolveOptions o = opts;
  o.list_all = list;
  CountResult res = count_diagram(d, X, o);
  out << "link=" << res.link_name << "\n";
  out << "structure=" << res.structure_name << "\n";
  out << "count=" << res.count << "\n";
  if (list) {
    out << "arcs=";
    for (size_t i = 0; i < res.arcs.size(); ++i)
      out << (i ? " " : "") << res.arcs[i];
    out << "\n";
    for (const auto& c : res.colorings) {
      out << "coloring=";
      for (size_t i = 0; i < c.size(); ++i)
        out << (i ? " " : "") << c[i];
      out << "\n";
    }
  }
  return 0;
}

int cmd_present(const std::string& link_path, bool simplify, std::ostream& out) {
  Diagram d = load_diagram_file(link_path);
  Presentation p = fundamental_presentation(d, simplify);
  out << "link=" << d.name << "\n";
  out << to_string(p);
  return 0;
}

int cmd_search(const std::string& family, int modulus, int jobs, std::ostream& out) {
  AffineFamily fam = affine_family_from_name(family);
  std::vector<int> passes = search_affine(modulus, fam, jobs);
  out << "search=affine\n";
  out << "family=" << (fam == AffineFamily::B ? "B" : "m") << "\n";
  out << "modulus=" << modulus << "\n";
  out << "passes=";
  for (size_t i = 0; i < passes.size(); ++i)
    out << (i ? " " : "") << passes[i];
  out << "\n";
  out << "count=" << passes.size() << "\n";
  return 0;
}

int cmd_enumerate(int order, bool up_to_iso, int limit, int jobs, std::ostream& out) {
  EnumerateOptions opts;
  opts.up_to_iso = up_to_iso;
  opts.jobs = jobs;
  opts.max_order = limit;
  auto found = enumerate_disingquandles(order, opts);
  out << "order=" << order << "\n";
  out << "found=" << found.size() << "\n";
  for (const auto& d : found)
    out << "\n" << serialize(d);
  return 0;
}

int cmd_corpus(const std::string& structure_path, const std::string& dir, const SolveOptions& opts,
               std::ostream& out) {
  DisingquandleTable X = load_disingquandle(structure_path);
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".lnk")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  if (files.empty())
    throw std::runtime_error("no .lnk files in directory: " + dir);

  std::map<long long, std::vector<std::string>> by_count;
  for (const auto& f : files) {
    CountResult res = count_diagram(load_diagram_file(f), X, opts);
    by_count[res.count].push_back(res.link_name);
  }

  out << "structure=" << X.name << "\n";
  std::vector<std::pair<std::string, long long>> rows;
  for (auto& [count, names] : by_count) {
    std::sort(names.begin(), names.end());
    std::string joined;
    for (const auto& n : names)
      joined += (joined.empty() ? "" : ", ") + n;
    rows.emplace_back(joined, count);
  }
  size_t w = 1;
  for (const auto& [names, _] : rows)
    w = std::max(w, names.size());
  auto pad = [](const std::string& s, size_t width) { return s + std::string(width - s.size(), ' '); };
  out << "| " << pad("L", w) << " | #Col |\n";
  out << "|-" << std::string(w, '-') << "-|------|\n";
  for (const auto& [names, count] : rows) {
    std::ostringstream c;
    c << count;
    out << "| " << pad(names, w) << " | " << pad(c.str(), 4) << " |\n";
  }
  return 0;
}

int cmd_build(const std::string& family, const std::map<std::string, int>& params, const std::string& out_path,
              std::ostream& out) {
  BuiltStructure built = build_family({family, params});
  std::string text = std::visit([](const auto& s) { return serialize(s); }, built);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path);
    if (!f)
      throw std::runtime_error("cannot write output file: " + out_path);
    f << text;
    out << "wrote " << out_path << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"dsq: finite disingquandle toolkit and dichromatic singular link coloring counter"};
  app.require_subcommand(0, 1);

  int jobs = default_jobs();
  bool quiet = false;
  app.add_option("--jobs", jobs, "worker threads for search and solve")->capture_default_str();
  app.add_flag("--quiet", quiet, "suppress the version banner");

  // check-structure
  auto* chk = app.add_subcommand("check-structure", "verify a structure file against the axiom catalog");
  std::string chk_file;
  CheckOptions chk_opts;
  chk->add_option("file", chk_file, "structure file (.dsq)")->required();
  chk->add_flag("--strict-223", chk_opts.strict_223, "also check the literal pair-map identities");
  chk->add_flag("--strict-gfam", chk_opts.strict_gfam, "literal reading of the G-family identity axiom");

  // check-link
  auto* chl = app.add_subcommand("check-link", "validate a link diagram file");
  std::string chl_file;
  chl->add_option("file", chl_file, "link file (.lnk)")->required();

  // build
  auto* bld = app.add_subcommand("build", "materialize a named structure family");
  std::string bld_family, bld_out;
  std::map<std::string, int> bld_params;
  int p_n = 0, p_m = 0, p_b = 0, p_c = 0, p_p = 0, p_go = 0, p_so = 0;
  bld->add_option("family", bld_family,
                  "dihedral|core|trivial|affine-m|affine-B|z6|prime-zeta|cyclic-type-family|trivial-gfamily")
      ->required();
  auto* on = bld->add_option("--n", p_n, "modulus / set size");
  auto* om = bld->add_option("--m", p_m, "affine-m parameter");
  auto* ob = bld->add_option("--B", p_b, "affine-B parameter");
  auto* oc = bld->add_option("--c", p_c, "trivial family shift");
  auto* op = bld->add_option("--p", p_p, "odd prime modulus");
  auto* ogo = bld->add_option("--group-order", p_go, "cyclic group order");
  auto* oso = bld->add_option("--set-order", p_so, "underlying set size");
  bld->add_option("--out", bld_out, "write to file instead of stdout");

  // count / color
  auto* cnt = app.add_subcommand("count", "coloring count of a link by a structure");
  std::string cnt_structure, cnt_link;
  cnt->add_option("--structure", cnt_structure, "structure file")->required();
  cnt->add_option("--link", cnt_link, "link file")->required();

  auto* col = app.add_subcommand("color", "colorings of a link by a structure");
  std::string col_structure, col_link;
  bool col_list = false;
  col->add_option("--structure", col_structure, "structure file")->required();
  col->add_option("--link", col_link, "link file")->required();
  col->add_flag("--list", col_list, "list every coloring");

  // present
  auto* prs = app.add_subcommand("present", "fundamental presentation of a link diagram");
  std::string prs_link;
  bool prs_simplify = false;
  prs->add_option("--link", prs_link, "link file")->required();
  prs->add_flag("--simplify", prs_simplify, "eliminate defined generators");

  // search
  auto* sch = app.add_subcommand("search", "exhaustive parameter searches");
  std::string sch_mode, sch_family;
  int sch_modulus = 0;
  sch->add_option("mode", sch_mode, "search mode (affine)")->required();
  sch->add_option("--modulus", sch_modulus, "modulus n")->required();
  sch->add_option("--family", sch_family, "B or m")->required();

  // enumerate
  auto* enm = app.add_subcommand("enumerate", "enumerate all structures of a given order");
  int enm_order = 0, enm_limit = 4;
  bool enm_iso = false;
  enm->add_option("--order", enm_order, "structure order")->required();
  enm->add_flag("--up-to-iso", enm_iso, "one representative per isomorphism class");
  enm->add_option("--limit", enm_limit, "largest order the enumerator will accept")->capture_default_str();

  // corpus
  auto* crp = app.add_subcommand("corpus", "count a directory of links and print the grouped table");
  std::string crp_structure, crp_dir;
  crp->add_option("--structure", crp_structure, "structure file")->required();
  crp->add_option("--dir", crp_dir, "directory of .lnk files")->required();

  std::vector<const char*> argv;
  argv.push_back("dsq");
  for (const auto& a : args)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 3;
  }

  if (!quiet)
    out << "# dsq " << kVersion << "\n";

  try {
    if (app.got_subcommand(chk))
      return cmd_check_structure(chk_file, chk_opts, out);
    if (app.got_subcommand(chl))
      return cmd_check_link(chl_file, out);
    if (app.got_subcommand(bld)) {
      if (on->count())
        bld_params["n"] = p_n;
      if (om->count())
        bld_params["m"] = p_m;
      if (ob->count())
        bld_params["B"] = p_b;
      if (oc->count())
        bld_params["c"] = p_c;
      if (op->count())
        bld_params["p"] = p_p;
      if (ogo->count())
        bld_params["group-order"] = p_go;
      if (oso->count())
        bld_params["set-order"] = p_so;
      return cmd_build(bld_family, bld_params, bld_out, out);
    }
    SolveOptions sopts;
    sopts.jobs = jobs;
    if (app.got_subcommand(cnt))
      return cmd_count(cnt_structure, cnt_link, false, sopts, out);
    if (app.got_subcommand(col))
      return cmd_count(col_structure, col_link, col_list, sopts, out);
    if (app.got_subcommand(prs))
      return cmd_present(prs_link, prs_simplify, out);
    if (app.got_subcommand(sch)) {
      if (sch_mode != "affine")
        throw StructureError("unknown search mode: " + sch_mode);
      return cmd_search(sch_family, sch_modulus, jobs, out);
    }
    if (app.got_subcommand(enm))
      return cmd_enumerate(enm_order, enm_iso, enm_limit, jobs, out);
    if (app.got_subcommand(crp))
      return cmd_corpus(crp_structure, crp_dir, sopts, out);
    err << "usage error: no command given (try --help)\n";
    return 3;
  } catch (const InvalidStructure& e) {
    out << e.what() << "\n";
    print_report(e.report(), out);
    return 1;
  } catch (const InvalidDiagram& e) {
    out << e.what() << "\n";
    print_issues(e.report(), out);
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const StructureError& e) {
    err << "usage error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace dsq::cli
