#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace ainf {

enum class Verdict { Pass, Fail, Undecided, Unsupported };

std::string to_string(Verdict v);

struct Witness {
  std::string input;
  std::string expected;
  std::string got;
};

struct CheckReport {
  std::string name;
  std::string identity;  // the identity or property being verified
  int cap = 0;
  Verdict verdict = Verdict::Pass;
  std::optional<Witness> witness;
  std::string detail;
  std::size_t checked = 0;  // number of basis inputs evaluated
  double seconds = 0.0;

  bool passed() const { return verdict == Verdict::Pass; }
};

// Number of worker threads used by the checkers; 1 by default.
void set_worker_count(unsigned n);
unsigned worker_count();

// Evaluates fn(i) for i in [0, n) and returns the smallest index whose
// result is a witness, so the outcome does not depend on the thread count.
std::optional<std::pair<std::size_t, Witness>> first_failure(
    std::size_t n, const std::function<std::optional<Witness>(std::size_t)>& fn);

template <class In, class Fn>
CheckReport run_check(std::string name, std::string identity, int cap,
                      const std::vector<In>& inputs, Fn&& fn) {
  CheckReport r;
  r.name = std::move(name);
  r.identity = std::move(identity);
  r.cap = cap;
  r.checked = inputs.size();
  auto fail = first_failure(inputs.size(), [&](std::size_t i) { return fn(inputs[i]); });
  if (fail) {
    r.verdict = Verdict::Fail;
    r.witness = std::move(fail->second);
  }
  return r;
}

// Combines sub-reports: FAIL dominates, then UNSUPPORTED, then UNDECIDED.
CheckReport combine(std::string name, std::string identity, int cap,
                    const std::vector<CheckReport>& parts);

}  // namespace ainf
