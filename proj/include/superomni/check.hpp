#ifndef SUPEROMNI_CHECK_HPP
#define SUPEROMNI_CHECK_HPP

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace superomni {

/// Execution policy for the exhaustive basis-tuple scans. `serial` is the
/// reference implementation; `parallel` partitions the tuple range with
/// OpenMP. Both return the same lexicographically-first failure.
enum class Exec { serial, parallel };

inline Exec defaultExec() {
#ifdef _OPENMP
  return Exec::parallel;
#else
  return Exec::serial;
#endif
}

/// Cap on the dimension exhaustive checkers will enumerate; the
/// SUPEROMNI_MAX_DIM environment variable overrides the default of 30.
inline std::size_t maxCheckDim() {
  if (const char* env = std::getenv("SUPEROMNI_MAX_DIM")) {
    long v = std::atol(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 30;
}

/// Smallest index in [0, count) where `holds` is false, scanning in index
/// order. The parallel path processes blocks with a min-reduction, so the
/// result does not depend on the schedule.
template <class Pred>
std::optional<std::size_t> firstFailure(std::size_t count, Exec exec, Pred&& holds) {
#ifdef _OPENMP
  if (exec == Exec::parallel && count >= 64) {
    const long long n = static_cast<long long>(count);
    const long long block = std::max(64LL, n / (8 * omp_get_max_threads()) + 1);
    for (long long start = 0; start < n; start += block) {
      const long long end = std::min(start + block, n);
      long long found = end;
#pragma omp parallel for schedule(dynamic, 8) reduction(min : found)
      for (long long i = start; i < end; ++i) {
        if (!holds(static_cast<std::size_t>(i)) && i < found) found = i;
      }
      if (found < end) return static_cast<std::size_t>(found);
    }
    return std::nullopt;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < count; ++i)
    if (!holds(i)) return i;
  return std::nullopt;
}

/// Outcome of one law checked over all basis tuples: pass, or the first
/// failing tuple with its exact residual.
struct Verdict {
  bool pass = true;
  std::string check;
  std::vector<std::string> tuple;  // basis names of the failing tuple
  std::string residual;            // rendered exact residual
  std::vector<std::pair<std::string, std::string>> residualCoords;  // name -> coefficient
  std::string note;

  explicit operator bool() const { return pass; }

  static Verdict ok(std::string check, std::string note = "") {
    Verdict v;
    v.check = std::move(check);
    v.note = std::move(note);
    return v;
  }
  static Verdict fail(std::string check, std::vector<std::string> tuple, std::string residual,
                      std::vector<std::pair<std::string, std::string>> residualCoords = {},
                      std::string note = "") {
    Verdict v;
    v.pass = false;
    v.check = std::move(check);
    v.tuple = std::move(tuple);
    v.residual = std::move(residual);
    v.residualCoords = std::move(residualCoords);
    v.note = std::move(note);
    return v;
  }
};

/// Ordered list of named verdicts, as printed by the CLI.
struct Report {
  std::vector<Verdict> verdicts;

  void add(Verdict v) { verdicts.push_back(std::move(v)); }
  bool pass() const {
    for (const Verdict& v : verdicts)
      if (!v.pass) return false;
    return true;
  }
};

}  // namespace superomni

#endif
