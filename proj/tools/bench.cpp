// Times the parallel kernels against their single-threaded runs: the layered
// profile search and the coset sweep behind minimal fillings.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>

#include "geodesy/filling.hpp"
#include "geodesy/search.hpp"

namespace {

double seconds(std::chrono::steady_clock::time_point from) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - from)
      .count();
}

void bench_search(long delta, long t, long cap, int jobs) {
  using namespace geodesy;
  SearchOptions serial;
  serial.layer_cap = cap;
  auto start = std::chrono::steady_clock::now();
  SearchResult ref = search_max_count(delta, t, serial);
  double serial_s = seconds(start);

  SearchOptions parallel = serial;
  parallel.jobs = jobs;
  start = std::chrono::steady_clock::now();
  SearchResult par = search_max_count(delta, t, parallel);
  double parallel_s = seconds(start);

  bool same = ref.max_count == par.max_count &&
              ref.profiles_explored == par.profiles_explored &&
              ref.witness == par.witness;
  std::printf("search delta=%ld t=%ld cap=%ld: max=%s profiles=%llu  "
              "serial %.3fs  jobs=%d %.3fs  match=%s\n",
              delta, t, cap, ref.max_count.get_str().c_str(),
              ref.profiles_explored, serial_s, jobs, parallel_s,
              same ? "yes" : "NO");
}

// A disjoint pile of octahedron boundaries gives the filling solver a kernel
// of one dimension per component, so the coset sweep is 2^k vectors.
std::string octahedra_json(int copies) {
  std::ostringstream out;
  out << "{\"dimension\": 2, \"faces\": [";
  bool first = true;
  for (int c = 0; c < copies; ++c) {
    // Octahedron on poles p0/p1 and equator e0..e3.
    const std::string p0 = "c" + std::to_string(c) + "p0";
    const std::string p1 = "c" + std::to_string(c) + "p1";
    std::string eq[4];
    for (int i = 0; i < 4; ++i)
      eq[i] = "c" + std::to_string(c) + "e" + std::to_string(i);
    for (int i = 0; i < 4; ++i) {
      for (const std::string& pole : {p0, p1}) {
        if (!first) out << ", ";
        first = false;
        out << "[\"" << pole << "\", \"" << eq[i] << "\", \"" << eq[(i + 1) % 4]
            << "\"]";
      }
    }
  }
  out << "]}";
  return out.str();
}

void bench_fillings(int copies, int jobs) {
  using namespace geodesy;
  f2::ChainComplexF2 complex = f2::build_simplicial(octahedra_json(copies));
  // Boundary of one triangle per component keeps the cycle spread out.
  std::vector<std::string> tops;
  for (int c = 0; c < copies; ++c)
    tops.push_back("c" + std::to_string(c) + "e0,c" + std::to_string(c) +
                   "e1,c" + std::to_string(c) + "p0");
  f2::ChainF2 cycle =
      f2::boundary(complex, f2::make_chain(complex, 2, tops));

  auto start = std::chrono::steady_clock::now();
  f2::FillingResult ref = f2::minimal_fillings(complex, cycle, 30, 4, 1);
  double serial_s = seconds(start);

  start = std::chrono::steady_clock::now();
  f2::FillingResult par = f2::minimal_fillings(complex, cycle, 30, 4, jobs);
  double parallel_s = seconds(start);

  bool same = ref.m == par.m && ref.count == par.count &&
              ref.kernel_dim == par.kernel_dim;
  std::printf("fillings octahedra=%d (kernel %d): m=%zu count=%s  "
              "serial %.3fs  jobs=%d %.3fs  match=%s\n",
              copies, ref.kernel_dim, ref.m, ref.count.get_str().c_str(),
              serial_s, jobs, parallel_s, same ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  int jobs = argc > 1 ? std::atoi(argv[1]) : 4;
  bench_search(4, 3, 3, jobs);
  bench_search(3, 4, 3, jobs);
  bench_fillings(20, jobs);
  return 0;
}
