#include "dmlab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace dmlab::detail {

namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

// FFTW's planner is not thread-safe; executions via fftw_execute_dft are.
std::mutex plan_mutex;

PlanPair& plans_for(int n) {
  static std::map<int, PlanPair> cache;
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<complexd> a(n), b(n);
  auto* ap = reinterpret_cast<fftw_complex*>(a.data());
  auto* bp = reinterpret_cast<fftw_complex*>(b.data());
  PlanPair p;
  unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  p.forward = fftw_plan_dft_1d(n, ap, bp, FFTW_FORWARD, flags);
  p.backward = fftw_plan_dft_1d(n, ap, bp, FFTW_BACKWARD, flags);
  if (!p.forward || !p.backward) throw std::runtime_error("fftw plan creation failed");
  return cache.emplace(n, p).first->second;
}

std::vector<complexd> run(const std::vector<complexd>& in, bool forward) {
  const int n = static_cast<int>(in.size());
  PlanPair& p = plans_for(n);
  std::vector<complexd> out(n);
  auto* ip = const_cast<fftw_complex*>(reinterpret_cast<const fftw_complex*>(in.data()));
  auto* op = reinterpret_cast<fftw_complex*>(out.data());
  fftw_execute_dft(forward ? p.forward : p.backward, ip, op);
  return out;
}

}  // namespace

std::vector<complexd> dft_forward(const std::vector<complexd>& in) { return run(in, true); }
std::vector<complexd> dft_backward(const std::vector<complexd>& in) { return run(in, false); }

}  // namespace dmlab::detail
