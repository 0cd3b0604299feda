#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "spin3/recursion.hpp"
#include "spin3/state.hpp"

namespace spin3 {

struct NegativeTailCountError : std::domain_error {
  explicit NegativeTailCountError(const std::string& what) : std::domain_error(what) {}
};

/// Genus-0 correlator with a concrete τ_{0,1} exponent:
/// <τ_{n+shift,m} τ_{0,1}^{tau01_exponent} τ_{0,0}^l>_0.
struct ConcreteKey {
  int m = 0;
  int shift = 0;
  long long tau01_exponent = 0;
  friend auto operator<=>(const ConcreteKey&, const ConcreteKey&) = default;
};

using ConcreteComb = std::map<ConcreteKey, Rational>;

/// Reruns the reduction with the tail count instantiated at a concrete k0:
/// every multiplier is a plain Rational, terms with a zero multiplier vanish
/// before their subtree is visited, and no polynomial arithmetic occurs
/// anywhere on this path. The rule table is transcribed here independently
/// of expand_once, and mutations never apply, so this path cross-checks the
/// symbolic engine's offset and polynomial bookkeeping.
class ConcreteReducer {
 public:
  explicit ConcreteReducer(long long k0);

  long long k0() const { return k0_; }

  /// Throws NegativeTailCountError when a visited state's concrete tail
  /// count k0 + dp is negative (k0 too small for this state).
  const ConcreteComb& reduce(const UState& s);

 private:
  ConcreteComb reduce_uncached(const UState& s);

  long long k0_;
  std::unordered_map<UState, ConcreteComb, UStateHash> cache_;
};

/// Concrete reductions of one state at several tail counts.
struct OracleRun {
  std::vector<long long> k_values;
  std::vector<ConcreteComb> per_value;  // parallel to k_values
};

/// Runs the concrete reduction at each of the given distinct nonnegative
/// tail counts.
OracleRun run_oracle(const UState& s, const std::vector<long long>& k_values);

struct InterpolationVerdict {
  bool pass = false;
  std::string detail;  // first mismatch, or a summary when everything agrees
};

/// Evaluates the symbolic reduction of s at every sample and compares with
/// the concrete rerun, key by key and exactly. Requires at least
/// degree(symbolic result) + 1 samples; fewer is an error before any oracle
/// computation runs.
InterpolationVerdict interpolation_check(Reducer& reducer, const UState& s,
                                         const std::vector<long long>& k_samples);

}  // namespace spin3
