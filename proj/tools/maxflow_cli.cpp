#include <algorithm>
#include <atomic>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "maxflow/dimacs.hpp"
#include "maxflow/generators.hpp"
#include "maxflow/oracle.hpp"
#include "maxflow/solve.hpp"

namespace fs = std::filesystem;
using namespace maxflow;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Network load(const std::string& path) {
  try {
    return parse_dimacs(read_file(path));
  } catch (const DimacsError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::out_of_range& e) {
    throw InputError(path + ": " + e.what());
  }
}

SolveOptions make_options(const std::string& algo, int k, bool audit, bool no_jumps, const std::string& gamma2) {
  SolveOptions opt;
  try {
    opt.algorithm = parse_algorithm(algo);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (k != 0 && !is_power_of_two(k)) throw InputError("--k must be a power of two");
  opt.k = k;
  opt.audit = audit;
  opt.jumps = !no_jumps;
  if (gamma2 == "printed")
    opt.gamma2 = Gamma2Mode::AsPrinted;
  else if (gamma2 == "reciprocal")
    opt.gamma2 = Gamma2Mode::Reciprocal;
  else
    throw InputError("--gamma2 must be 'printed' or 'reciprocal'");
  return opt;
}

FlowResult run_solver(const Network& net, const SolveOptions& opt) {
  try {
    return solve(net, opt);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

std::string csv_row(const std::string& instance, const FlowResult& r) {
  const Counters& c = r.counters;
  std::ostringstream out;
  out << instance << ',' << c.algorithm << ',' << c.k << ',' << c.n << ',' << c.m << ',' << to_string(r.value) << ','
      << c.phases << ',' << c.pushes_saturating << ',' << c.pushes_large << ',' << c.pushes_medium << ','
      << c.pushes_other << ',' << c.frf_pushes << ',' << c.frf_pulls << ',' << c.relabels << ',' << c.contractions
      << ',' << c.total_violations();
  return out.str();
}

constexpr const char* kCsvHeader =
    "instance,algorithm,k,n,m,value,phases,pushes_saturating,pushes_large,pushes_medium,pushes_other,"
    "frf_pushes,frf_pulls,relabels,contractions,violations";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum flow solvers with exact arithmetic and audit checks"};
  app.require_subcommand(1);

  std::string algo = "enhanced", input, output, counters_path, gamma2 = "printed";
  int k = 0;
  bool audit = false, no_jumps = false;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a DIMACS max-flow instance");
  solve_cmd->add_option("--algo", algo, "generic, lmes or enhanced")->capture_default_str();
  solve_cmd->add_option("--k", k, "Scaling base, a power of two (0 = default)");
  solve_cmd->add_flag("--audit", audit, "Run invariant audits");
  solve_cmd->add_option("--counters", counters_path, "Write the counter report here");
  solve_cmd->add_flag("--no-jumps", no_jumps, "Enhanced: always divide Delta by k");
  solve_cmd->add_option("--gamma2", gamma2, "Enhanced negative-excess rule: printed or reciprocal");
  solve_cmd->add_option("input", input, "DIMACS problem file")->required();
  solve_cmd->add_option("-o,--output", output, "Solution file (default stdout)");

  std::string solution;
  auto* verify_cmd = app.add_subcommand("verify", "Check a solution against an instance");
  verify_cmd->add_option("input", input, "DIMACS problem file")->required();
  verify_cmd->add_option("solution", solution, "Solution file")->required();

  std::string family = "random";
  int n = 10, m = 30, alpha = 10, width = 3, depth = 4, gen_k = 4;
  long long U = 100;
  std::uint64_t seed = 1;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--family", family, "random, pathological or layered")->capture_default_str();
  gen_cmd->add_option("--n", n, "random: node count");
  gen_cmd->add_option("--m", m, "random: arc count");
  gen_cmd->add_option("--U", U, "random, layered: largest capacity");
  gen_cmd->add_option("--seed", seed, "random, layered: seed");
  gen_cmd->add_option("--k", gen_k, "pathological: base");
  gen_cmd->add_option("--alpha", alpha, "pathological: exponent");
  gen_cmd->add_option("--width", width, "layered: nodes per layer");
  gen_cmd->add_option("--depth", depth, "layered: layer count");
  gen_cmd->add_option("-o,--output", output, "Output file")->required();

  std::vector<std::string> algos{"generic", "lmes", "enhanced"};
  std::string corpus, csv;
  unsigned jobs = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Run solvers over a directory of instances");
  bench_cmd->add_option("--algos", algos, "Algorithms to run")->delimiter(',');
  bench_cmd->add_option("--corpus", corpus, "Directory of .max files")->required();
  bench_cmd->add_option("--out", csv, "CSV output")->required();
  bench_cmd->add_option("--jobs", jobs, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve_cmd) {
      Network net = load(input);
      SolveOptions opt = make_options(algo, k, audit, no_jumps, gamma2);
      FlowResult r = run_solver(net, opt);
      std::string text = write_solution(net, r.flow, r.value);
      if (output.empty())
        std::cout << text;
      else
        write_file(output, text);
      if (!counters_path.empty()) write_file(counters_path, report(r.counters));
      VerifyReport vr = verify_flow(net, r.flow);
      bool ok = vr.ok && vr.value == r.value && r.cut_capacity == r.value;
      if (!ok) std::cerr << "solver returned an infeasible or non-maximum flow\n";
      if (r.counters.total_violations() > 0) {
        std::cerr << "audit reported " << r.counters.total_violations() << " violations\n";
        for (const auto& [check, detail] : r.counters.first_violation) std::cerr << "  " << check << ": " << detail << '\n';
        ok = false;
      }
      return ok ? kOk : kVerifyFailed;
    }
    if (*verify_cmd) {
      Network net = load(input);
      Solution sol;
      try {
        sol = parse_solution(net, read_file(solution));
      } catch (const DimacsError& e) {
        throw InputError(solution + ": " + e.what());
      }
      VerifyReport vr = verify_flow(net, sol.flow);
      cap_t best = oracle_max_flow(net).value;
      for (const auto& p : vr.problems) std::cout << "problem " << p << '\n';
      if (vr.ok && vr.value != sol.value)
        std::cout << "problem stated value " << to_string(sol.value) << " but flow carries " << to_string(vr.value)
                  << '\n';
      if (vr.ok && vr.value != best)
        std::cout << "problem flow value " << to_string(vr.value) << " below maximum " << to_string(best) << '\n';
      bool ok = vr.ok && vr.value == sol.value && vr.value == best;
      std::cout << (ok ? "OK" : "FAIL") << " value " << to_string(vr.value) << '\n';
      return ok ? kOk : kVerifyFailed;
    }
    if (*gen_cmd) {
      Network net;
      try {
        if (family == "random")
          net = random_network(n, m, U, seed);
        else if (family == "pathological")
          net = pathological_network(gen_k, alpha);
        else if (family == "layered")
          net = layered_network(width, depth, U, seed);
        else
          throw InputError("unknown family '" + family + "'");
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      } catch (const std::out_of_range& e) {
        throw InputError(e.what());
      }
      write_file(output, write_dimacs(net));
      return kOk;
    }
    if (*bench_cmd) {
      std::vector<fs::path> files;
      if (!fs::is_directory(corpus)) throw InputError("not a directory: " + corpus);
      for (const auto& entry : fs::directory_iterator(corpus))
        if (entry.is_regular_file()) files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      std::vector<SolveOptions> opts;
      for (const auto& a : algos) opts.push_back(make_options(a, 0, false, false, "printed"));
      std::vector<Network> nets;
      for (const auto& f : files) nets.push_back(load(f.string()));

      const std::size_t tasks = files.size() * opts.size();
      std::vector<std::string> rows(tasks);
      std::vector<std::string> errors(tasks);
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i = next++; i < tasks; i = next++) {
          std::size_t fi = i / opts.size(), ai = i % opts.size();
          try {
            rows[i] = csv_row(files[fi].filename().string(), solve(nets[fi], opts[ai]));
          } catch (const std::exception& e) {
            errors[i] = files[fi].string() + " (" + algos[ai] + "): " + e.what();
          }
        }
      };
      std::vector<std::thread> pool;
      for (unsigned j = 0; j < std::max(1u, jobs); ++j) pool.emplace_back(worker);
      for (auto& th : pool) th.join();

      std::string text = std::string(kCsvHeader) + "\n";
      bool ok = true;
      for (std::size_t i = 0; i < tasks; ++i) {
        if (!errors[i].empty()) {
          std::cerr << errors[i] << '\n';
          ok = false;
          continue;
        }
        text += rows[i] + "\n";
      }
      write_file(csv, text);
      return ok ? kOk : kVerifyFailed;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kOk;
}
