#include "surfbasis/instance_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "surfbasis/errors.hpp"

namespace surfbasis {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

bool valid_id(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

template <typename T>
T parse_number(const std::string& tok, std::size_t line, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line, std::string("bad ") + what + " '" + tok + "'");
  return value;
}

}  // namespace

EmbeddingDescription parse_instance(const std::string& text) {
  EmbeddingDescription desc;
  bool have_count = false;
  std::map<std::string, EdgeId> ids;
  // Rotations and markers may name edges declared later, so resolve darts at the end.
  struct Pending {
    std::size_t line;
    std::string token;
  };
  struct PendingRot {
    std::size_t line;
    VertexId v;
    std::vector<Pending> darts;
  };
  std::vector<PendingRot> rotations;
  std::vector<Pending> markers;

  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "v") {
      if (tok.size() != 2) fail(line_no, "expected 'v <count>'");
      if (have_count) fail(line_no, "vertex count given twice");
      desc.vertex_count = parse_number<std::size_t>(tok[1], line_no, "vertex count");
      have_count = true;
    } else if (kw == "e") {
      if (tok.size() != 6) fail(line_no, "expected 'e <id> <u> <v> <weight> <sig>'");
      if (!valid_id(tok[1])) fail(line_no, "bad edge id '" + tok[1] + "'");
      if (ids.count(tok[1]) != 0) fail(line_no, "duplicate edge id '" + tok[1] + "'");
      EdgeRecord rec;
      rec.label = tok[1];
      rec.u = parse_number<VertexId>(tok[2], line_no, "vertex");
      rec.v = parse_number<VertexId>(tok[3], line_no, "vertex");
      rec.weight = parse_number<double>(tok[4], line_no, "weight");
      if (!std::isfinite(rec.weight)) fail(line_no, "weight must be finite");
      if (rec.weight < 0) fail(line_no, "negative weight");
      if (tok[5] != "0" && tok[5] != "1") fail(line_no, "signature must be 0 or 1");
      rec.sig = tok[5] == "1";
      ids[tok[1]] = static_cast<EdgeId>(desc.edges.size());
      desc.edges.push_back(std::move(rec));
    } else if (kw == "rot") {
      if (tok.size() < 2) fail(line_no, "expected 'rot <vertex> <dart>...'");
      VertexId v = parse_number<VertexId>(tok[1], line_no, "vertex");
      std::vector<Pending> darts;
      for (std::size_t i = 2; i < tok.size(); ++i) darts.push_back({line_no, tok[i]});
      rotations.push_back({line_no, v, std::move(darts)});
    } else if (kw == "bnd") {
      if (tok.size() != 2) fail(line_no, "expected 'bnd <dart>'");
      markers.push_back({line_no, tok[1]});
    } else {
      fail(line_no, "unknown directive '" + kw + "'");
    }
  }
  if (!have_count) throw InputError("missing 'v <count>' line");

  auto resolve = [&](const Pending& p) -> DartId {
    const std::string& t = p.token;
    if (t.size() < 2 || (t.back() != '+' && t.back() != '-')) fail(p.line, "bad dart '" + t + "'");
    auto it = ids.find(t.substr(0, t.size() - 1));
    if (it == ids.end()) fail(p.line, "unknown edge in dart '" + t + "'");
    return t.back() == '+' ? head_dart(it->second) : tail_dart(it->second);
  };

  for (std::size_t e = 0; e < desc.edges.size(); ++e) {
    const auto& rec = desc.edges[e];
    if (rec.u < 0 || rec.v < 0 || static_cast<std::size_t>(rec.u) >= desc.vertex_count ||
        static_cast<std::size_t>(rec.v) >= desc.vertex_count) {
      throw InputError("edge " + rec.label + " has an endpoint out of range");
    }
  }
  desc.rotation.assign(desc.vertex_count, {});
  std::vector<bool> seen(desc.vertex_count, false);
  for (const auto& [line, v, darts] : rotations) {
    if (v < 0 || static_cast<std::size_t>(v) >= desc.vertex_count) {
      fail(line, "rot names vertex " + std::to_string(v) + " which does not exist");
    }
    if (seen[static_cast<std::size_t>(v)]) fail(line, "second rot for vertex " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
    for (const auto& p : darts) desc.rotation[static_cast<std::size_t>(v)].push_back(resolve(p));
  }
  for (const auto& p : markers) desc.boundary_darts.push_back(resolve(p));
  return desc;
}

EmbeddingDescription read_instance_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_instance(ss.str());
}

std::string format_weight(Weight w) {
  if (w == std::floor(w) && std::fabs(w) < 1e15) return std::to_string(static_cast<long long>(w));
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w);
  (void)ec;
  return std::string(buf, ptr);
}

std::string format_instance(const EmbeddingDescription& desc) {
  auto name = [&](EdgeId e) {
    const auto& label = desc.edges[static_cast<std::size_t>(e)].label;
    return label.empty() ? std::to_string(e) : label;
  };
  auto dart = [&](DartId d) { return name(edge_of(d)) + (is_head(d) ? "+" : "-"); };
  std::ostringstream out;
  out << "v " << desc.vertex_count << '\n';
  for (std::size_t e = 0; e < desc.edges.size(); ++e) {
    const auto& rec = desc.edges[e];
    out << "e " << name(static_cast<EdgeId>(e)) << ' ' << rec.u << ' ' << rec.v << ' ' << format_weight(rec.weight)
        << ' ' << (rec.sig ? 1 : 0) << '\n';
  }
  for (std::size_t v = 0; v < desc.rotation.size(); ++v) {
    out << "rot " << v;
    for (DartId d : desc.rotation[v]) out << ' ' << dart(d);
    out << '\n';
  }
  for (DartId d : desc.boundary_darts) out << "bnd " << dart(d) << '\n';
  return out.str();
}

}  // namespace surfbasis
