#include "surfbasis/report.hpp"

#include <charconv>
#include <sstream>

#include "surfbasis/errors.hpp"
#include "surfbasis/gf2_matrix.hpp"
#include "surfbasis/instance_io.hpp"
#include "surfbasis/oracle.hpp"
#include "surfbasis/signatures.hpp"

namespace surfbasis {

namespace {

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s, std::size_t line) {
  double x = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw InputError("line " + std::to_string(line) + ": bad number '" + s + "'");
  }
  return x;
}

long parse_long(const std::string& s, std::size_t line) {
  long x = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw InputError("line " + std::to_string(line) + ": bad integer '" + s + "'");
  }
  return x;
}

void fill_decomposition(const EmbeddedGraph& g, RunReport& r) {
  EmbeddedGraph h = puncture_if_closed(g);
  auto dec = tree_coforest(h);
  r.tree_edges = dec.tree.size();
  r.coforest_edges = dec.coforest.size();
  r.leftover_edges = dec.leftover.size();
}

std::string edge_name(const EmbeddedGraph& g, EdgeId e) {
  const auto& label = g.edge(e).label;
  return label.empty() ? std::to_string(e) : label;
}

}  // namespace

bool RunReport::operator==(const RunReport& o) const {
  auto same_stats = [](const TopoStats& a, const TopoStats& b) {
    return a.n == b.n && a.m == b.m && a.faces == b.faces && a.boundary == b.boundary && a.euler_char == b.euler_char &&
           a.surface_euler_char == b.surface_euler_char && a.genus == b.genus && a.orientable == b.orientable &&
           a.beta == b.beta;
  };
  if (command != o.command || !same_stats(stats, o.stats) || tree_edges != o.tree_edges ||
      coforest_edges != o.coforest_edges || leftover_edges != o.leftover_edges || total_weight != o.total_weight ||
      timings != o.timings || cycles.size() != o.cycles.size() || verdicts.size() != o.verdicts.size()) {
    return false;
  }
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto& a = cycles[i];
    const auto& b = o.cycles[i];
    if (a.edges != b.edges || a.weight != b.weight || a.signature != b.signature || a.forced != b.forced) return false;
  }
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const auto& a = verdicts[i];
    const auto& b = o.verdicts[i];
    if (a.check != b.check || a.status != b.status || a.detail != b.detail) return false;
  }
  return true;
}

bool RunReport::verified() const {
  for (const auto& v : verdicts) {
    if (v.status == "fail") return false;
  }
  return true;
}

RunReport info_report(const EmbeddedGraph& g) {
  RunReport r;
  r.command = "info";
  r.stats = topo_stats(g);
  fill_decomposition(g, r);
  return r;
}

RunReport basis_report(const EmbeddedGraph& input, const BasisResult& result, BasisKind kind) {
  RunReport r;
  r.command = kind == BasisKind::Cycle ? "mcb" : "mhb";
  r.stats = topo_stats(input);
  fill_decomposition(input, r);
  SignatureSystem sigs(result.graph, tree_coforest(result.graph));
  for (const auto& c : result.cycles) {
    ReportCycle rc;
    for (EdgeId e : c.edges) rc.edges.push_back(edge_name(input, e));
    rc.weight = c.weight;
    rc.forced = c.forced;
    rc.signature = (kind == BasisKind::Cycle ? sigs.cycle_signature(c.edges) : sigs.homology_signature(c.edges)).to_string();
    r.cycles.push_back(std::move(rc));
    r.total_weight += c.weight;
  }
  r.timings = result.timings;
  return r;
}

void verify_basis(const BasisResult& result, BasisKind kind, RunReport& report) {
  const EmbeddedGraph& g = result.graph;
  SignatureSystem sigs(g, tree_coforest(g));
  const std::size_t want = kind == BasisKind::Cycle ? sigs.dimension() : sigs.beta();
  auto add = [&](std::string check, bool ok, std::string detail) {
    report.verdicts.push_back({std::move(check), ok ? "pass" : "fail", std::move(detail)});
  };

  add("size", result.cycles.size() == want,
      std::to_string(result.cycles.size()) + " of " + std::to_string(want));

  bool simple = true;
  bool essential = true;
  std::vector<BitVec> rows;
  for (const auto& c : result.cycles) {
    simple = simple && is_simple_cycle(g, c.edges);
    if (kind == BasisKind::Homology) essential = essential && !is_null_homologous(g, c.edges);
    rows.push_back(kind == BasisKind::Cycle ? sigs.cycle_signature(c.edges) : sigs.homology_signature(c.edges));
  }
  add("simple", simple, "");
  if (kind == BasisKind::Homology) add("essential", essential, "");
  std::size_t r = rank(rows);
  add("rank", r == want, std::to_string(r) + " of " + std::to_string(want));

  const std::size_t dim = g.m() + 1 - g.n();
  Weight expected = 0;
  bool feasible = true;
  if (kind == BasisKind::Cycle) {
    if (dim <= 20) {
      expected = greedy_mcb(g).total_weight;
    } else {
      feasible = false;
    }
  } else if (dim <= 20) {
    expected = greedy_mhb_by_enumeration(g).total_weight;
  } else if (want <= 12 && (g.n() << want) * g.n() <= 50'000'000) {
    expected = greedy_mhb_by_classes(g).total_weight;
  } else {
    feasible = false;
  }
  if (!feasible) {
    report.verdicts.push_back({"oracle_weight", "skipped", "instance too large for the oracle"});
  } else {
    add("oracle_weight", expected == result.total_weight, "oracle " + format_weight(expected));
  }
}

std::string write_structured(const RunReport& r) {
  std::ostringstream out;
  out << "report " << r.command << "\n";
  const auto& s = r.stats;
  out << "stat n " << s.n << "\n"
      << "stat m " << s.m << "\n"
      << "stat faces " << s.faces << "\n"
      << "stat boundary " << s.boundary << "\n"
      << "stat euler_char " << s.euler_char << "\n"
      << "stat surface_euler_char " << s.surface_euler_char << "\n"
      << "stat genus " << s.genus << "\n"
      << "stat orientable " << (s.orientable ? 1 : 0) << "\n"
      << "stat beta " << s.beta << "\n";
  out << "decomposition " << r.tree_edges << " " << r.coforest_edges << " " << r.leftover_edges << "\n";
  for (const auto& c : r.cycles) {
    out << "cycle " << format_weight(c.weight) << " " << (c.forced ? 1 : 0) << " "
        << (c.signature.empty() ? "-" : c.signature);
    for (const auto& e : c.edges) out << " " << e;
    out << "\n";
  }
  if (r.command != "info") out << "total " << format_weight(r.total_weight) << "\n";
  for (const auto& [phase, secs] : r.timings) out << "timing " << phase << " " << format_double(secs) << "\n";
  for (const auto& v : r.verdicts) {
    out << "verify " << v.check << " " << v.status;
    if (!v.detail.empty()) out << " " << v.detail;
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

RunReport parse_structured(const std::string& text) {
  RunReport r;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool started = false;
  bool ended = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (ended) throw InputError("line " + std::to_string(lineno) + ": content after 'end'");
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    auto need = [&](std::size_t k) {
      if (tok.size() < k) throw InputError("line " + std::to_string(lineno) + ": too few fields for '" + key + "'");
    };
    if (!started) {
      if (key != "report") throw InputError("line " + std::to_string(lineno) + ": expected 'report'");
      need(1);
      r.command = tok[0];
      started = true;
    } else if (key == "stat") {
      need(2);
      long v = parse_long(tok[1], lineno);
      auto& s = r.stats;
      if (tok[0] == "n") s.n = static_cast<std::size_t>(v);
      else if (tok[0] == "m") s.m = static_cast<std::size_t>(v);
      else if (tok[0] == "faces") s.faces = static_cast<std::size_t>(v);
      else if (tok[0] == "boundary") s.boundary = static_cast<std::size_t>(v);
      else if (tok[0] == "euler_char") s.euler_char = v;
      else if (tok[0] == "surface_euler_char") s.surface_euler_char = v;
      else if (tok[0] == "genus") s.genus = v;
      else if (tok[0] == "orientable") s.orientable = v != 0;
      else if (tok[0] == "beta") s.beta = v;
      else throw InputError("line " + std::to_string(lineno) + ": unknown stat '" + tok[0] + "'");
    } else if (key == "decomposition") {
      need(3);
      r.tree_edges = static_cast<std::size_t>(parse_long(tok[0], lineno));
      r.coforest_edges = static_cast<std::size_t>(parse_long(tok[1], lineno));
      r.leftover_edges = static_cast<std::size_t>(parse_long(tok[2], lineno));
    } else if (key == "cycle") {
      need(3);
      ReportCycle c;
      c.weight = parse_double(tok[0], lineno);
      c.forced = parse_long(tok[1], lineno) != 0;
      c.signature = tok[2] == "-" ? "" : tok[2];
      c.edges.assign(tok.begin() + 3, tok.end());
      r.cycles.push_back(std::move(c));
    } else if (key == "total") {
      need(1);
      r.total_weight = parse_double(tok[0], lineno);
    } else if (key == "timing") {
      need(2);
      r.timings.push_back({tok[0], parse_double(tok[1], lineno)});
    } else if (key == "verify") {
      need(2);
      Verdict v{tok[0], tok[1], ""};
      for (std::size_t i = 2; i < tok.size(); ++i) v.detail += (i > 2 ? " " : "") + tok[i];
      r.verdicts.push_back(std::move(v));
    } else if (key == "end") {
      ended = true;
    } else {
      throw InputError("line " + std::to_string(lineno) + ": unknown record '" + key + "'");
    }
  }
  if (!ended) throw InputError("structured report is missing 'end'");
  return r;
}

std::string write_text(const RunReport& r) {
  std::ostringstream out;
  const auto& s = r.stats;
  out << "n=" << s.n << " m=" << s.m << " faces=" << s.faces << " boundary=" << s.boundary << " chi=" << s.euler_char
      << " genus=" << s.genus << " " << (s.orientable ? "orientable" : "non-orientable") << " beta=" << s.beta << "\n";
  if (s.boundary == 0) out << "no boundary: decomposition taken after filling in the last face as a boundary\n";
  out << "tree=" << r.tree_edges << " coforest=" << r.coforest_edges << " leftover=" << r.leftover_edges << "\n";
  if (r.command == "info") return out.str();
  for (std::size_t i = 0; i < r.cycles.size(); ++i) {
    const auto& c = r.cycles[i];
    out << "cycle " << i + 1 << ": weight " << format_weight(c.weight) << (c.forced ? " (forced)" : "") << " [";
    for (std::size_t k = 0; k < c.edges.size(); ++k) out << (k ? " " : "") << c.edges[k];
    out << "]\n";
  }
  out << "total weight " << format_weight(r.total_weight) << "\n";
  for (const auto& [phase, secs] : r.timings) out << "  " << phase << ": " << format_double(secs) << " s\n";
  for (const auto& v : r.verdicts) {
    out << "verify " << v.check << ": " << v.status;
    if (!v.detail.empty()) out << " (" << v.detail << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace surfbasis
