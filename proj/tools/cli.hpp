// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: solve, generate, reduce, verify and bench.
//
// Exit codes: 0 success, 1 parse or parameter error, 2 precondition
// mismatch or failed verification, 3 size guard, 4 internal error.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spm/spm.hpp"

namespace spm::cli {

enum ExitCode { kOk = 0, kInputError = 1, kPreconditionError = 2, kGuardError = 3, kInternalError = 4 };

struct SolveOptions {
  std::string instance;
  std::string kind = "2ppm";
  std::string algo = "auto";
  std::uint64_t seed = 0;
  int steps = 50;
  int samples = 64;
  std::string out;
};

struct GenerateOptions {
  std::string type;
  int na = 0;
  int d = 3;
  std::uint64_t seed = 0;
  int copies = 1;
  std::string src;
  std::string sets;
  std::string out;
  std::string meta;
};

struct ReduceOptions {
  std::string instance;
  std::string solution;
  std::string meta;
  std::string out;
};

struct VerifyOptions {
  std::string instance;
  std::string solution;
  std::string identity;
  std::string meta;
};

struct BenchOptions {
  std::string dir;
  std::vector<std::string> algos{"auto"};
  std::vector<std::uint64_t> seeds;
  std::string kind = "2ppm";
  int steps = 50;
  int samples = 64;
  std::string out;
  bool no_timing = false;
};

// Sidecar written next to generated gadgets: a header line `x vc` or
// `x kcover <N>` followed by the source multigraph or set system.
struct Sidecar {
  std::string type;
  int copies = 0;
  std::string body;
};

inline std::string make_sidecar(const VcGadget& g) { return "x vc\n" + serialize_multigraph(g.source); }

inline std::string make_sidecar(const KcGadget& g) {
  return "x kcover " + std::to_string(g.copies) + "\n" + serialize_set_system(g.system);
}

inline Sidecar parse_sidecar(const std::string& text) {
  const std::size_t end = text.find('\n');
  std::istringstream header(text.substr(0, end));
  std::string tag;
  Sidecar s;
  header >> tag >> s.type;
  if (tag != "x" || (s.type != "vc" && s.type != "kcover")) {
    throw InputError("expected sidecar header 'x vc' or 'x kcover <N>'", 1);
  }
  if (s.type == "kcover" && !(header >> s.copies)) throw InputError("missing copy count", 1);
  s.body = end == std::string::npos ? std::string() : text.substr(end + 1);
  return s;
}

namespace detail {

inline ProblemKind kind_from(const std::string& name) {
  const std::optional<ProblemKind> k = parse_kind(name);
  if (!k) throw InputError("unknown kind '" + name + "' (expected 2pm or 2ppm)");
  return *k;
}

inline Algorithm algorithm_from(const std::string& name) {
  const std::optional<Algorithm> a = parse_algorithm(name);
  if (!a) throw InputError("unknown algorithm '" + name + "'");
  return *a;
}

// Prefixes the file name to line-numbered parse errors.
template <typename Parse>
auto load(const std::string& path, Parse parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline BipartiteInstance load_instance(const std::string& path) {
  return load(path, [](const std::string& t) { return parse_instance(t); });
}

inline Multigraph load_source(const std::string& name_or_path) {
  if (std::optional<Multigraph> g = named_graph(name_or_path)) return *g;
  if (!std::filesystem::exists(name_or_path)) {
    throw InputError("--src must be k4, k33, petersen or a multigraph file, got '" + name_or_path + "'");
  }
  return load(name_or_path, [](const std::string& t) { return parse_multigraph(t); });
}

inline std::string meta_path(const std::string& explicit_path, const std::string& instance_path) {
  return explicit_path.empty() ? instance_path + ".meta" : explicit_path;
}

inline Sidecar load_sidecar(const std::string& path) {
  return load(path, [](const std::string& t) { return parse_sidecar(t); });
}

inline VcGadget load_vc_gadget(const Sidecar& meta, const BipartiteInstance& inst) {
  if (meta.type != "vc") throw InputError("sidecar does not describe a vertex-cover gadget");
  VcGadget g = vc_gadget(parse_multigraph(meta.body));
  if (!(g.instance == inst)) throw InputError("instance does not match its sidecar");
  return g;
}

inline KcGadget load_kc_gadget(const Sidecar& meta, const BipartiteInstance& inst) {
  if (meta.type != "kcover") throw InputError("sidecar does not describe a max k-cover gadget");
  KcGadget g = kcover_gadget(parse_set_system(meta.body), meta.copies);
  if (!(g.instance == inst)) throw InputError("instance does not match its sidecar");
  return g;
}

inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_file(path, text);
  }
}

inline std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

}  // namespace detail

inline int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  const BipartiteInstance inst = detail::load_instance(o.instance);
  const ProblemKind kind = detail::kind_from(o.kind);
  const Algorithm algo = detail::algorithm_from(o.algo);
  const Solution sol = solve_with(inst, kind, algo, {o.steps, o.samples, o.seed});
  const std::string summary =
      sol.strategy + " profit=" + std::to_string(sol.profit) + " guarantee=" + sol.guarantee + "\n";
  if (o.out == "-") {
    out << serialize_solution(sol);
    err << summary;
  } else {
    if (!o.out.empty()) write_file(o.out, serialize_solution(sol));
    out << summary;
  }
  return kOk;
}

inline int cmd_generate(const GenerateOptions& o, std::ostream& out) {
  auto write_gadget = [&](const BipartiteInstance& inst, const std::string& sidecar) {
    if (o.out.empty() || o.out == "-") throw InputError("gadgets need --out for the sidecar file");
    write_file(o.out, serialize_instance(inst));
    write_file(detail::meta_path(o.meta, o.out), sidecar);
  };
  if (o.type == "biregular") {
    detail::emit(o.out, serialize_instance(gen_biregular(o.na, o.d, o.seed)), out);
  } else if (o.type == "tight") {
    detail::emit(o.out, serialize_instance(incidence_instance(gen_tight_example(o.copies), 3)), out);
  } else if (o.type == "incidence") {
    if (o.src.empty()) throw InputError("--type incidence needs --src");
    detail::emit(o.out, serialize_instance(incidence_instance(detail::load_source(o.src), o.d)), out);
  } else if (o.type == "vc-gadget") {
    if (o.src.empty()) throw InputError("--type vc-gadget needs --src");
    const VcGadget g = vc_gadget(detail::load_source(o.src));
    write_gadget(g.instance, make_sidecar(g));
  } else if (o.type == "kcover-gadget") {
    if (o.sets.empty()) throw InputError("--type kcover-gadget needs --sets");
    const SetSystem sys = detail::load(o.sets, [](const std::string& t) { return parse_set_system(t); });
    const KcGadget g = kcover_gadget(sys, o.copies);
    write_gadget(g.instance, make_sidecar(g));
  } else {
    throw InputError("unknown --type '" + o.type + "'");
  }
  return kOk;
}

inline int cmd_reduce(const ReduceOptions& o, std::ostream& out) {
  const BipartiteInstance inst = detail::load_instance(o.instance);
  const Sidecar meta = detail::load_sidecar(detail::meta_path(o.meta, o.instance));
  const VcGadget g = detail::load_vc_gadget(meta, inst);
  const Solution sol = detail::load(o.solution, [](const std::string& t) { return parse_solution(t); });
  const CoverExtraction x = extract_vertex_cover(g, sol);
  out << "cover size=" << x.cover.size() << " vertices=";
  for (std::size_t i = 0; i < x.cover.size(); ++i) out << (i ? " " : "") << x.cover[i] + 1;
  out << " profit=" << x.solution.profit << "\n";
  if (!o.out.empty()) detail::emit(o.out, serialize_solution(x.solution), out);
  return kOk;
}

inline int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const BipartiteInstance inst = detail::load_instance(o.instance);
  if (!o.solution.empty()) {
    const Solution sol = detail::load(o.solution, [](const std::string& t) { return parse_solution(t); });
    const Validation v = validate_solution(inst, sol);
    if (!v) {
      out << "FAIL " << v.violation << "\n";
      return kPreconditionError;
    }
    out << "PASS " << kind_name(sol.kind) << " profit=" << sol.profit << "\n";
    return kOk;
  }
  const Sidecar meta = detail::load_sidecar(detail::meta_path(o.meta, o.instance));
  if (o.identity == "vc") {
    const VcIdentityReport r = certify_vc_identity(detail::load_vc_gadget(meta, inst));
    out << r.opt_2ppm << " + " << r.opt_vc << " = " << 2 * r.n + r.m << (r.holds ? " PASS" : " FAIL")
        << "\n";
    return r.holds ? kOk : kPreconditionError;
  }
  if (o.identity == "kcover") {
    const KcoverIdentityReport r = certify_kcover_identity(detail::load_kc_gadget(meta, inst));
    out << r.opt_2ppm << " = " << r.copies << "*" << r.opt_mc << " + " << r.m - r.k
        << (r.holds ? " PASS" : " FAIL") << "\n";
    return r.holds ? kOk : kPreconditionError;
  }
  throw InputError("verify needs --solution or --identity vc|kcover");
}

// Optimum used for the ratio column: brute force when it fits, otherwise a
// closed form whose degree preconditions have been checked.
inline std::optional<int> known_optimum(const BipartiteInstance& inst, ProblemKind kind) {
  if (kind == ProblemKind::TwoPPM && brute_2ppm_fits(inst) && a_perfect_matching(inst)) {
    return solve_brute_2ppm(inst).profit;
  }
  if (kind == ProblemKind::TwoPM && brute_2pm_fits(inst)) return solve_brute_2pm(inst).profit;
  const std::optional<int> d = left_regular_degree_with_pairs(inst);
  if (!d) return std::nullopt;
  if (*d >= 4) return inst.num_goods();
  if (*d == 3 && kind == ProblemKind::TwoPPM) {
    const int nu = static_cast<int>(max_matching_general(build_auxiliary_graph(inst).graph).size());
    return inst.num_goods() / 2 + nu;
  }
  return std::nullopt;
}

inline const char* error_tag(const std::exception& e) {
  if (dynamic_cast<const PreconditionError*>(&e)) return "error:precondition";
  if (dynamic_cast<const GuardError*>(&e)) return "error:guard";
  if (dynamic_cast<const InputError*>(&e)) return "error:input";
  return "error:internal";
}

inline int cmd_bench(const BenchOptions& o, std::ostream& out) {
  if (!std::filesystem::is_directory(o.dir)) throw InputError("not a directory: " + o.dir);
  const ProblemKind kind = detail::kind_from(o.kind);
  std::vector<Algorithm> algos;
  for (const std::string& a : o.algos) algos.push_back(detail::algorithm_from(a));
  const std::vector<std::uint64_t> seeds = o.seeds.empty() ? std::vector<std::uint64_t>{0} : o.seeds;

  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(o.dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".spm") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::ostringstream csv;
  csv << "instance,n_a,n_b,algo,profit,optimum,ratio,ms,seed\n";
  for (const auto& file : files) {
    const std::string id = file.stem().string();
    std::optional<BipartiteInstance> inst;
    try {
      inst = detail::load_instance(file.string());
    } catch (const Error& e) {
      for (Algorithm algo : algos) {
        for (std::uint64_t seed : seeds) {
          csv << id << ",,," << algorithm_name(algo) << "," << error_tag(e) << ",,,," << seed << "\n";
        }
      }
      continue;
    }
    std::optional<int> optimum;
    try {
      optimum = known_optimum(*inst, kind);
    } catch (const Error&) {
      optimum.reset();
    }
    for (Algorithm algo : algos) {
      for (std::uint64_t seed : seeds) {
        csv << id << "," << inst->num_goods() << "," << inst->num_bidders() << ","
            << algorithm_name(algo) << ",";
        const auto start = std::chrono::steady_clock::now();
        try {
          const Solution sol = solve_with(*inst, kind, algo, {o.steps, o.samples, seed});
          const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
          csv << sol.profit << ",";
          if (optimum) {
            csv << *optimum << ","
                << (*optimum == 0 ? std::string("1.0000")
                                  : detail::fixed(static_cast<double>(sol.profit) / *optimum, 4));
          } else {
            csv << ",";
          }
          csv << "," << detail::fixed(o.no_timing ? 0.0 : ms, 3) << "," << seed << "\n";
        } catch (const std::exception& e) {
          csv << error_tag(e) << "," << (optimum ? std::to_string(*optimum) : "") << ",,," << seed
              << "\n";
        }
      }
    }
  }
  detail::emit(o.out, csv.str(), out);
  return kOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Second price matching solver", "spm"};
  app.require_subcommand(1);

  SolveOptions so;
  CLI::App* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("instance", so.instance, "Instance file")->required();
  solve->add_option("--kind", so.kind, "2pm or 2ppm")->capture_default_str();
  solve->add_option("--algo", so.algo, "auto|32regular|d2regular|a2|greedy|cg|brute")
      ->capture_default_str();
  solve->add_option("--seed", so.seed, "Random seed")->envname("SPM_SEED")->capture_default_str();
  solve->add_option("--steps", so.steps, "Continuous greedy steps")->capture_default_str();
  solve->add_option("--samples", so.samples, "Continuous greedy samples per step")
      ->capture_default_str();
  solve->add_option("--out", so.out, "Solution file ('-' for stdout)");

  GenerateOptions go;
  CLI::App* generate = app.add_subcommand("generate", "Generate an instance");
  generate->add_option("--type", go.type, "biregular|tight|vc-gadget|kcover-gadget|incidence")
      ->required();
  generate->add_option("--na", go.na, "Number of goods (biregular)");
  generate->add_option("--d", go.d, "Good degree (biregular, incidence)")->capture_default_str();
  generate->add_option("--seed", go.seed, "Random seed")->envname("SPM_SEED")->capture_default_str();
  generate->add_option("--copies", go.copies, "Copies (tight, kcover-gadget)")->capture_default_str();
  generate->add_option("--src", go.src, "k4, k33, petersen or a multigraph file");
  generate->add_option("--sets", go.sets, "Max k-cover file (kcover-gadget)");
  generate->add_option("--out", go.out, "Output instance file");
  generate->add_option("--meta", go.meta, "Sidecar path (default <out>.meta)");

  ReduceOptions ro;
  CLI::App* reduce = app.add_subcommand("reduce", "Extract a vertex cover from a gadget solution");
  reduce->add_option("instance", ro.instance, "Vertex-cover gadget instance")->required();
  reduce->add_option("--solution", ro.solution, "Solution file")->required();
  reduce->add_option("--meta", ro.meta, "Sidecar path (default <instance>.meta)");
  reduce->add_option("--out", ro.out, "Transformed solution file");

  VerifyOptions vo;
  CLI::App* verify = app.add_subcommand("verify", "Check a solution or a gadget identity");
  verify->add_option("instance", vo.instance, "Instance file")->required();
  CLI::Option* sol_opt = verify->add_option("--solution", vo.solution, "Solution file");
  CLI::Option* id_opt =
      verify->add_option("--identity", vo.identity, "vc or kcover")->check(CLI::IsMember({"vc", "kcover"}));
  sol_opt->excludes(id_opt);
  verify->add_option("--meta", vo.meta, "Sidecar path (default <instance>.meta)");

  BenchOptions bo;
  CLI::App* bench = app.add_subcommand("bench", "Benchmark solvers over a directory");
  bench->add_option("dir", bo.dir, "Directory of .spm files")->required();
  bench->add_option("--algos", bo.algos, "Algorithms")->delimiter(',')->capture_default_str();
  bench->add_option("--seeds", bo.seeds, "Seeds")->delimiter(',')->envname("SPM_SEED");
  bench->add_option("--kind", bo.kind, "2pm or 2ppm")->capture_default_str();
  bench->add_option("--steps", bo.steps, "Continuous greedy steps")->capture_default_str();
  bench->add_option("--samples", bo.samples, "Continuous greedy samples")->capture_default_str();
  bench->add_option("--out", bo.out, "CSV file (default stdout)");
  bench->add_flag("--no-timing", bo.no_timing, "Write 0 in the ms column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (solve->parsed()) return cmd_solve(so, out, err);
    if (generate->parsed()) return cmd_generate(go, out);
    if (reduce->parsed()) return cmd_reduce(ro, out);
    if (verify->parsed()) return cmd_verify(vo, out);
    if (bench->parsed()) return cmd_bench(bo, out);
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kPreconditionError;
  } catch (const GuardError& e) {
    err << "size guard: " << e.what() << "\n";
    return kGuardError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInputError;
}

}  // namespace spm::cli
