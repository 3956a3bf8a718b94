#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "surfbasis/errors.hpp"
#include "surfbasis/generators.hpp"
#include "surfbasis/instance_io.hpp"
#include "surfbasis/mcb.hpp"
#include "surfbasis/mhb.hpp"
#include "surfbasis/report.hpp"

namespace surfbasis::cli {

namespace {

struct Flags {
  std::string path;
  bool verify = false;
  std::string format = "text";
  unsigned threads = 1;
  std::string recursion = "balanced";
  bool check_invariants = false;
};

std::size_t to_size(const std::string& s, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw InputError(std::string("gen: bad ") + what + " '" + s + "'");
  return static_cast<std::size_t>(v);
}

EmbeddingDescription generate(const std::string& kind, const std::vector<std::string>& params, bool non_orientable) {
  auto want = [&](std::size_t k) {
    if (params.size() != k) {
      throw InputError("gen " + kind + ": expected " + std::to_string(k) + " parameter(s), got " +
                       std::to_string(params.size()));
    }
  };
  if (kind == "theta") return want(0), theta_instance();
  if (kind == "torus1") return want(0), torus1_instance();
  if (kind == "k4-sphere") return want(0), k4_sphere_instance();
  if (kind == "projective-loop") return want(0), projective_loop_instance();
  if (kind == "random-rotation") {
    want(3);
    std::size_t n = to_size(params[0], "n");
    std::size_t m = to_size(params[1], "m");
    if (n == 0 || m + 1 < n) throw InputError("gen random-rotation: need n >= 1 and m >= n - 1");
    return random_rotation(n, m, to_size(params[2], "seed"), !non_orientable);
  }
  want(1);
  std::size_t n = to_size(params[0], "size");
  if (kind == "torus-grid" || kind == "klein-grid") {
    if (n == 0) throw InputError("gen " + kind + ": size must be positive");
    return kind == "torus-grid" ? torus_grid(n) : klein_grid(n);
  }
  if (kind == "projective-grid" || kind == "double-torus") {
    if (n < 3) throw InputError("gen " + kind + ": size must be at least 3");
    return kind == "projective-grid" ? projective_grid(n) : double_torus_grid(n);
  }
  throw InputError("gen: unknown kind '" + kind + "'");
}

void emit(const RunReport& report, const Flags& f, std::ostream& out) {
  out << (f.format == "structured" ? write_structured(report) : write_text(report));
}

int run_basis(BasisKind kind, const Flags& f, std::ostream& out) {
  EmbeddedGraph g = EmbeddedGraph::build(read_instance_file(f.path));
  BasisOptions options;
  options.threads = f.threads;
  options.support.recursion = f.recursion == "simple" ? Recursion::Simple : Recursion::Balanced;
  options.support.check_invariants = f.check_invariants;
  BasisResult result = kind == BasisKind::Cycle ? minimum_cycle_basis(g, options) : minimum_homology_basis(g, options);
  RunReport report = basis_report(g, result, kind);
  if (f.verify) verify_basis(result, kind, report);
  emit(report, f, out);
  return report.verified() ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum cycle and homology bases of graphs embedded on surfaces"};
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("instance", f.path, "Instance file")->required();
    sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  };
  auto* info = app.add_subcommand("info", "Print topological statistics of an instance");
  add_common(info);

  std::vector<CLI::App*> basis_cmds;
  for (const char* name : {"mcb", "mhb"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "mcb" ? "Minimum cycle basis" : "Minimum homology basis");
    add_common(sub);
    sub->add_flag("--verify", f.verify, "Check rank and, when feasible, weight against brute force");
    sub->add_option("--threads", f.threads, "Worker threads")->check(CLI::Range(1U, 256U));
    sub->add_option("--recursion", f.recursion, "Support-vector recursion")
        ->check(CLI::IsMember({"balanced", "simple"}));
    sub->add_flag("--check-invariants", f.check_invariants, "Verify support-vector invariants after every update");
    basis_cmds.push_back(sub);
  }

  std::string kind;
  std::vector<std::string> params;
  std::string output;
  bool non_orientable = false;
  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  gen->add_option("kind", kind,
                  "theta | torus1 | k4-sphere | projective-loop | torus-grid N | klein-grid N | "
                  "projective-grid N | double-torus N | random-rotation n m seed")
      ->required();
  gen->add_option("params", params, "Parameters of the kind");
  gen->add_option("-o,--output", output, "Output file (default stdout)");
  gen->add_flag("--non-orientable", non_orientable, "random-rotation: random signature bits");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (info->parsed()) {
      EmbeddedGraph g = EmbeddedGraph::build(read_instance_file(f.path));
      emit(info_report(g), f, out);
      return kOk;
    }
    if (basis_cmds[0]->parsed()) return run_basis(BasisKind::Cycle, f, out);
    if (basis_cmds[1]->parsed()) return run_basis(BasisKind::Homology, f, out);
    std::string text = format_instance(generate(kind, params, non_orientable));
    if (output.empty()) {
      out << text;
    } else {
      std::ofstream file(output, std::ios::binary);
      if (!file) throw InputError("cannot write '" + output + "'");
      file << text;
    }
    return kOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  }
}

}  // namespace surfbasis::cli
