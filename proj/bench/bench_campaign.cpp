// Serial vs OpenMP campaign throughput; also checks the two reports agree.

#include "masure/campaign.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

using namespace masure;

namespace {

double seconds(const campaign::CampaignConfig& c, campaign::Execution mode, std::string& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = campaign::run_campaign(c, mode).dump();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t trials = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 200;
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-6s %8s %10s %10s %8s %s\n", "model", "trials", "serial_s", "openmp_s", "speedup", "reports");
  int status = 0;
  for (const char* kind : {"tree", "sl3"}) {
    campaign::CampaignConfig c;
    c.model.kind = kind;
    c.model.q = 2;
    c.trials = std::string(kind) == "tree" ? trials * 5 : trials;
    c.window_radius = std::string(kind) == "tree" ? 16 : 6;
    c.height_bound = std::string(kind) == "tree" ? 1 : 2;
    std::string a, b;
    double s = seconds(c, campaign::Execution::Serial, a);
    double p = seconds(c, campaign::Execution::Parallel, b);
    std::printf("%-6s %8zu %10.3f %10.3f %8.2f %s\n", kind, c.trials, s, p, s / p, a == b ? "identical" : "DIFFER");
    if (a != b) status = 1;
  }
  return status;
}
