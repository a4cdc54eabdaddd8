// Command-line front end for the never-worse relation library.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nwr/engine.hpp"
#include "nwr/error.hpp"
#include "nwr/exact.hpp"
#include "nwr/io.hpp"
#include "nwr/reducer.hpp"
#include "nwr/solver.hpp"
#include "nwr/structure.hpp"

namespace fs = std::filesystem;
using namespace nwr;

namespace {

constexpr int kUsage = 1;
constexpr int kInvalidInput = 2;
constexpr int kSizeLimit = 3;

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    write_file(path, content);
  }
}

std::string join_ids(const TargetArena& arena, const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : " ") + arena.id(v);
  return out;
}

VertexSet parse_id_list(const TargetArena& arena, const std::string& csv) {
  VertexSet s = arena.empty_set();
  std::stringstream in(csv);
  std::string id;
  while (std::getline(in, id, ',')) {
    if (!id.empty()) s.set(arena.at(id));
  }
  if (s.none()) throw InputError("empty vertex list");
  return s;
}

struct SolveOptions {
  std::string arena, family, out;
  bool exact = false, iterate = false, random = false;
  std::uint64_t seed = 0, max_den = 100;
  double tol = kDefaultTolerance;
  std::size_t max_iters = kDefaultMaxIterations;
};

int run_validate(const std::string& path) {
  const TargetArena arena = parse_arena(read_file(path), ParseMode::Lenient);
  const auto report = validate_arena(arena);
  if (report.ok()) {
    std::cout << "valid arena: " << arena.size() << " vertices, " << arena.edge_count() << " edges\n";
    return 0;
  }
  for (const auto& line : report.violations) std::cout << line << "\n";
  return kInvalidInput;
}

int run_solve(const SolveOptions& o) {
  const TargetArena arena = parse_arena(read_file(o.arena));
  DistributionFamily mu;
  if (!o.family.empty()) {
    mu = parse_family(arena, read_file(o.family));
  } else if (o.random) {
    mu = random_family(arena, o.max_den, o.seed);
  } else {
    mu = uniform_family(arena);
  }
  std::string json;
  if (o.iterate) {
    const auto values = vertex_values_iterative(arena, mu, o.tol, o.max_iters);
    for (Vertex v = 0; v < arena.size(); ++v) {
      std::cout << arena.id(v) << " = " << std::setprecision(12) << values.values[v] << "\n";
    }
    if (!values.converged) std::cout << "warning: no convergence after " << values.iterations << " sweeps\n";
    json = serialize_values(arena, values);
  } else {
    const auto values = vertex_values(arena, mu);
    for (Vertex v = 0; v < arena.size(); ++v) std::cout << arena.id(v) << " = " << format_rational(values[v]) << "\n";
    json = serialize_values(arena, values);
  }
  if (!o.out.empty()) write_file(o.out, json);
  return 0;
}

int run_relate(const std::string& path, bool exact, std::size_t limit, unsigned threads, const std::string& out,
               const std::string& classes_out) {
  const TargetArena arena = parse_arena(read_file(path));
  SaturateStats stats;
  const NwrRelation r = saturate(arena, {threads}, &stats);
  std::cout << "pairs: " << stats.pairs << " after " << stats.rounds << " rounds\n";
  const auto classes = r.equivalence_classes();
  for (const auto& c : classes) {
    // quotienting only merges vertices of one owner
    std::vector<Vertex> prot, nat;
    for (Vertex x : c) (arena.is_protagonist(x) ? prot : nat).push_back(x);
    if (prot.size() > 1) std::cout << "class: " << join_ids(arena, prot) << "\n";
    if (nat.size() > 1) std::cout << "class: " << join_ids(arena, nat) << "\n";
  }
  if (exact) {
    std::size_t missed = 0;
    for (Vertex v = 0; v < arena.size(); ++v) {
      for (Vertex w = 0; w < arena.size(); ++w) {
        if (v == w || r.below(v, w)) continue;
        VertexSet ws = arena.empty_set();
        ws.set(w);
        if (decide_nwr(arena, v, ws, limit).holds) {
          std::cout << "exact only: " << arena.id(v) << " <= {" << arena.id(w) << "}\n";
          ++missed;
        }
      }
    }
    std::cout << "singleton pairs missed by saturation: " << missed << "\n";
  }
  if (!out.empty()) write_file(out, serialize_relation(arena, r));
  if (!classes_out.empty()) write_file(classes_out, serialize_classes(arena, classes));
  return 0;
}

int run_reduce(const std::string& path, const std::string& out, const std::string& report_path,
               const std::string& dot, unsigned threads) {
  const TargetArena arena = parse_arena(read_file(path));
  const auto result = reduce_fixpoint(arena, {threads});
  const auto& rep = result.report;
  std::cout << "vertices: " << rep.original_vertices << " -> " << rep.reduced_vertices << "\n"
            << "edges: " << rep.original_edges << " -> " << rep.reduced_edges << "\n"
            << "merged classes: " << rep.merged_classes() << "\n"
            << "edges trimmed: " << rep.removed.size() << "\n"
            << "rounds: " << rep.rounds << "\n";
  if (!out.empty()) write_file(out, serialize_arena(result.arena));
  if (!report_path.empty()) write_file(report_path, serialize_report(rep));
  if (!dot.empty()) write_file(dot, to_dot(result.arena));
  return 0;
}

struct CertifyOptions {
  std::string arena, source, against, verify, out, family_out, eps;
  std::size_t limit = kDefaultExactLimit;
};

int run_certify(const CertifyOptions& o) {
  const TargetArena arena = parse_arena(read_file(o.arena));
  NwrCertificate cert;
  if (!o.verify.empty()) {
    cert = parse_certificate(arena, read_file(o.verify));
    if (!verify_certificate(arena, cert)) {
      std::cout << "certificate rejected\n";
      return kInvalidInput;
    }
    std::cout << "certificate accepted\n";
  } else {
    if (o.source.empty() || o.against.empty()) throw CLI::ValidationError("--source and --against are required");
    const Vertex v = arena.at(o.source);
    const VertexSet w = parse_id_list(arena, o.against);
    const auto decision = decide_nwr(arena, v, w, o.limit);
    if (decision.holds) {
      std::cout << "holds: " << o.source << " is never worse than {" << join_ids(arena, members(w)) << "}\n";
      return 0;
    }
    cert = *decision.certificate;
    std::cout << "refuted\n";
    emit(o.out, serialize_certificate(arena, cert));
  }
  const Rational eps = o.eps.empty() ? default_epsilon(arena.size()) : parse_rational(o.eps);
  const auto mu = epsilon_witness(arena, cert, eps);
  const auto values = vertex_values(arena, mu);
  emit(o.family_out, serialize_family(arena, mu));
  Rational best = 0;
  for_each_member(cert.w, [&](Vertex x) { best = std::max(best, values[x]); });
  std::cout << "witness: Val(" << arena.id(cert.v) << ") = " << format_rational(values[cert.v])
            << (values[cert.v] > best ? " > " : " <= ") << format_rational(best) << " = max over W\n";
  return values[cert.v] > best ? 0 : kInvalidInput;
}

int run_gen(std::size_t np, std::size_t nn, const std::string& density, std::size_t targets, std::uint64_t seed,
            const std::string& out, const std::string& family_out, std::uint64_t max_den) {
  const TargetArena arena = random_arena(np, nn, parse_rational(density), targets, seed);
  emit(out, serialize_arena(arena));
  if (!family_out.empty()) write_file(family_out, serialize_family(arena, random_family(arena, max_den, seed)));
  return 0;
}

int run_2dp(const std::string& path, const std::string& s1, const std::string& t1, const std::string& s2,
            const std::string& t2, std::size_t limit, const std::string& out) {
  const Digraph g = parse_graph(read_file(path));
  const auto query = reduce_2dp(g, g.find(s1), g.find(t1), g.find(s2), g.find(t2));
  if (!out.empty()) write_file(out, serialize_arena(query.arena));
  std::cout << "arena: " << query.arena.size() << " vertices, query " << query.arena.id(query.v) << " vs {"
            << join_ids(query.arena, members(query.w)) << "}\n";
  const auto decision = decide_nwr(query.arena, query.v, query.w, limit);
  std::cout << "relation " << (decision.holds ? "holds" : "refuted") << "\n";
  if (g.size() <= kTwoPathsOracleLimit) {
    const bool disjoint = solve_2dp_oracle(g, g.find(s1), g.find(t1), g.find(s2), g.find(t2));
    std::cout << "disjoint paths " << (disjoint ? "exist" : "do not exist") << "\n";
  }
  return 0;
}

int run_bench(const std::string& dir, const std::string& csv_path, unsigned threads) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::ostringstream csv;
  csv << "name,|V|,|E|,|V_reduced|,|E_reduced|,classes,edges_trimmed,rounds,wall_ms\n";
  std::size_t v_before = 0, v_after = 0, e_before = 0, e_after = 0;
  for (const auto& file : files) {
    const TargetArena arena = parse_arena(read_file(file.string()));
    const auto start = std::chrono::steady_clock::now();
    const auto result = reduce_fixpoint(arena, {threads});
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const auto& rep = result.report;
    csv << file.stem().string() << ',' << rep.original_vertices << ',' << rep.original_edges << ','
        << rep.reduced_vertices << ',' << rep.reduced_edges << ',' << rep.merged_classes() << ','
        << rep.removed.size() << ',' << rep.rounds << ',' << std::fixed << std::setprecision(3) << ms << '\n';
    csv.unsetf(std::ios::fixed);
    v_before += rep.original_vertices;
    v_after += rep.reduced_vertices;
    e_before += rep.original_edges;
    e_after += rep.reduced_edges;
  }
  emit(csv_path, csv.str());
  auto percent = [](std::size_t before, std::size_t after) {
    return before == 0 ? 0.0 : 100.0 * static_cast<double>(before - after) / static_cast<double>(before);
  };
  std::cout << "arenas: " << files.size() << "\n"
            << std::fixed << std::setprecision(2) << "vertex reduction: " << percent(v_before, v_after) << "%\n"
            << "edge reduction: " << percent(e_before, e_after) << "%\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Never-worse relation toolkit for MDP arenas"};
  app.require_subcommand(1);
  int status = 0;

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check the arena invariants");
  validate->add_option("arena", validate_path, "Arena JSON")->required();

  SolveOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "Maximal reachability values for one family");
  solve->add_option("arena", solve_opts.arena, "Arena JSON")->required();
  solve->add_option("--family", solve_opts.family, "Family JSON (default: uniform)");
  auto* exact_flag = solve->add_flag("--exact", solve_opts.exact, "Exact policy iteration (default)");
  solve->add_flag("--iterate", solve_opts.iterate, "Value iteration")->excludes(exact_flag);
  solve->add_flag("--random", solve_opts.random, "Draw a random family instead of the uniform one");
  solve->add_option("--seed", solve_opts.seed, "Seed for --random");
  solve->add_option("--max-den", solve_opts.max_den, "Denominator for --random");
  solve->add_option("--tol", solve_opts.tol, "Value iteration tolerance")->check(CLI::PositiveNumber);
  solve->add_option("--max-iters", solve_opts.max_iters, "Value iteration sweep cap");
  solve->add_option("--out", solve_opts.out, "Write values JSON here");

  std::string relate_path, relate_out, relate_classes;
  bool relate_exact = false;
  std::size_t relate_limit = kDefaultExactLimit;
  unsigned threads = 1;
  auto* relate = app.add_subcommand("relate", "Saturate the under-approximation");
  relate->add_option("arena", relate_path, "Arena JSON")->required();
  relate->add_flag("--exact", relate_exact, "Also decide every singleton pair exactly");
  relate->add_option("--limit", relate_limit, "Vertex limit of the exact decider");
  relate->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  relate->add_option("--out", relate_out, "Write relation JSON here");
  relate->add_option("--classes", relate_classes, "Write equivalence classes JSON here");

  std::string reduce_path, reduce_out, reduce_report, reduce_dot;
  auto* reduce = app.add_subcommand("reduce", "Quotient and trim until nothing changes");
  reduce->add_option("arena", reduce_path, "Arena JSON")->required();
  reduce->add_option("--out", reduce_out, "Write reduced arena JSON here");
  reduce->add_option("--report", reduce_report, "Write reduction report JSON here");
  reduce->add_option("--dot", reduce_dot, "Write the reduced arena as DOT here");
  reduce->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  CertifyOptions cert_opts;
  auto* certify = app.add_subcommand("certify", "Search or verify a refutation certificate");
  certify->add_option("arena", cert_opts.arena, "Arena JSON")->required();
  certify->add_option("--source", cert_opts.source, "Vertex v");
  certify->add_option("--against", cert_opts.against, "Comma-separated set W");
  certify->add_option("--verify", cert_opts.verify, "Certificate JSON to check instead of searching");
  certify->add_option("--limit", cert_opts.limit, "Vertex limit of the exact decider");
  certify->add_option("--eps", cert_opts.eps, "Witness epsilon as num/den");
  certify->add_option("--out", cert_opts.out, "Write the certificate here (default stdout)");
  certify->add_option("--family-out", cert_opts.family_out, "Write the witness family here (default stdout)");

  std::size_t gen_np = 4, gen_nn = 3, gen_targets = 1;
  std::string gen_density = "1/2", gen_out, gen_family;
  std::uint64_t seed = 0, max_den = 100;
  auto* gen = app.add_subcommand("gen", "Generate a random arena");
  gen->add_option("--protagonist", gen_np, "Protagonist vertex count");
  gen->add_option("--nature", gen_nn, "Nature vertex count");
  gen->add_option("--density", gen_density, "Edge density as num/den");
  gen->add_option("--targets", gen_targets, "Target count");
  gen->add_option("--seed", seed, "Seed");
  gen->add_option("--out", gen_out, "Write arena JSON here (default stdout)");
  gen->add_option("--family-out", gen_family, "Also write a random family here");
  gen->add_option("--max-den", max_den, "Denominator for --family-out");

  std::string dp_path, s1, t1, s2, t2, dp_out;
  std::size_t dp_limit = 64;
  auto* two = app.add_subcommand("2dp", "Build and decide the two-disjoint-paths arena");
  two->add_option("graph", dp_path, "Graph JSON")->required();
  two->add_option("--s1", s1)->required();
  two->add_option("--t1", t1)->required();
  two->add_option("--s2", s2)->required();
  two->add_option("--t2", t2)->required();
  two->add_option("--limit", dp_limit, "Vertex limit of the exact decider");
  two->add_option("--out", dp_out, "Write the arena JSON here");

  std::string bench_dir, bench_csv;
  auto* bench = app.add_subcommand("bench", "Reduce every arena in a directory");
  bench->add_option("dir", bench_dir, "Directory of arena JSON files")->required()->check(CLI::ExistingDirectory);
  bench->add_option("--csv", bench_csv, "Write CSV here (default stdout)");
  bench->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (validate->parsed()) status = run_validate(validate_path);
    if (solve->parsed()) status = run_solve(solve_opts);
    if (relate->parsed()) status = run_relate(relate_path, relate_exact, relate_limit, threads, relate_out, relate_classes);
    if (reduce->parsed()) status = run_reduce(reduce_path, reduce_out, reduce_report, reduce_dot, threads);
    if (certify->parsed()) status = run_certify(cert_opts);
    if (gen->parsed()) status = run_gen(gen_np, gen_nn, gen_density, gen_targets, seed, gen_out, gen_family, max_den);
    if (two->parsed()) status = run_2dp(dp_path, s1, t1, s2, t2, dp_limit, dp_out);
    if (bench->parsed()) status = run_bench(bench_dir, bench_csv, threads);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kSizeLimit;
  }
  return status;
}
