// Times the serial reference path against the OpenMP path for each parallel
// kernel and checks that both produce identical output.
//
//   bench_parallel [--reps N] [--threads T]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rclat/enumeration.hpp"
#include "rclat/oracle.hpp"
#include "rclat/parallel.hpp"

using namespace rclat;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto start = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

struct Kernel {
  std::string name;
  // Returns a digest of the output so the two paths can be compared.
  std::function<std::string(Exec)> run;
};

std::string census_digest(Exec exec) {
  std::string digest;
  for (const auto& level : oracle::enumerate_posets_upto(8, exec))
    for (const auto& e : level.entries) digest += e.key.bytes;
  return digest;
}

std::string blocks_digest(Exec exec) {
  std::string digest;
  for (int r = 2; r <= 8; ++r)
    for (const auto& b : gen_basic_blocks(r, 4, exec, 12).blocks) digest += b.key.bytes;
  return digest;
}

std::string count_digest(Exec exec) {
  std::string digest;
  for (int k = 1; k <= 4; ++k)
    for (int r = 2; r <= 2 * k; ++r) digest += count_blocks(18, k, r, exec).str() + ",";
  return digest;
}

std::string generation_digest(Exec exec) {
  std::string digest;
  for (const auto& e : enumerate_rc_lattices(11, 3, 0, exec)) digest += canon_key(e.lattice.poset()).bytes;
  return digest;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP timings"};
  int reps = 3;
  int threads = 0;
  app.add_option("--reps", reps, "Repetitions per measurement")->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "OpenMP threads (0 = default)");
  CLI11_PARSE(app, argc, argv);
  set_thread_count(threads);

  const std::vector<Kernel> kernels{
      {"poset census n<=8", census_digest},
      {"basic blocks k=4", blocks_digest},
      {"count_blocks n=18", count_digest},
      {"enumerate n=11 k=3", generation_digest},
  };

  std::cout << "threads: " << max_threads() << "\n";
  std::cout << std::left << std::setw(22) << "kernel" << std::right << std::setw(12) << "serial s"
            << std::setw(12) << "parallel s" << std::setw(10) << "speedup" << "  output\n";
  bool all_equal = true;
  for (const auto& k : kernels) {
    std::string serial_out;
    std::string parallel_out;
    const double serial = best_of(reps, [&] { serial_out = k.run(Exec::serial); });
    const double parallel = best_of(reps, [&] { parallel_out = k.run(Exec::parallel); });
    const bool equal = serial_out == parallel_out;
    all_equal &= equal;
    std::cout << std::left << std::setw(22) << k.name << std::right << std::fixed << std::setprecision(4)
              << std::setw(12) << serial << std::setw(12) << parallel << std::setprecision(2)
              << std::setw(10) << serial / parallel << "  " << (equal ? "identical" : "MISMATCH") << "\n";
  }
  return all_equal ? EXIT_SUCCESS : EXIT_FAILURE;
}
