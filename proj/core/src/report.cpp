#include "ainf/report.hpp"

#include <algorithm>
#include <mutex>

namespace ainf {

namespace {
std::atomic<unsigned> g_workers{1};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Undecided:
      return "UNDECIDED";
    case Verdict::Unsupported:
      return "UNSUPPORTED";
  }
  return "?";
}

void set_worker_count(unsigned n) { g_workers = std::max(1u, n); }
unsigned worker_count() { return g_workers; }

std::optional<std::pair<std::size_t, Witness>> first_failure(
    std::size_t n, const std::function<std::optional<Witness>(std::size_t)>& fn) {
  unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      if (auto w = fn(i)) return std::make_pair(i, std::move(*w));
    return std::nullopt;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{n};
  std::mutex mu;
  std::optional<Witness> best_witness;
  std::exception_ptr error;

  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n || i >= best.load()) return;
      try {
        auto w = fn(i);
        if (!w) continue;
        std::lock_guard lock(mu);
        if (i < best.load()) {
          best = i;
          best_witness = std::move(w);
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        best = 0;
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) threads.emplace_back(work);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  if (best_witness) return std::make_pair(best.load(), std::move(*best_witness));
  return std::nullopt;
}

CheckReport combine(std::string name, std::string identity, int cap,
                    const std::vector<CheckReport>& parts) {
  CheckReport r;
  r.name = std::move(name);
  r.identity = std::move(identity);
  r.cap = cap;
  auto rank = [](Verdict v) {
    switch (v) {
      case Verdict::Fail:
        return 3;
      case Verdict::Unsupported:
        return 2;
      case Verdict::Undecided:
        return 1;
      default:
        return 0;
    }
  };
  for (const auto& p : parts) {
    r.checked += p.checked;
    r.seconds += p.seconds;
    if (rank(p.verdict) > rank(r.verdict)) {
      r.verdict = p.verdict;
      r.witness = p.witness;
      r.detail = p.name + (p.detail.empty() ? "" : ": " + p.detail);
    }
  }
  return r;
}

}  // namespace ainf
