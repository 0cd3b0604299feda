#pragma once

#include <array>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spin3/state.hpp"

namespace spin3 {

struct RecursionInapplicableError : std::domain_error {
  explicit RecursionInapplicableError(const std::string& what) : std::domain_error(what) {}
};

/// Fault-injection switch for the verification suite. Each value perturbs
/// exactly one rewrite rule; the checks must flip to FAIL under every one.
enum class RuleMutation {
  none,
  p_split_prefactor,        // p·b1·b2/6 -> p·b1·b2/3 in the label-1 two-way split
  triple_reduction_factor,  // (k+dk-2)/3 -> (k+dk-1)/3 in the genus-0 tail reduction
  assembly_middle_sign,     // -3 -> +3 on the middle term of the genus-3 assembly
};

struct ExpansionTerm {
  KPoly coeff;
  UState child;
};

/// Left-hand multiplier (Σ a_i)·(2g + t - 1) of the descent identity.
/// Requires genus >= 1 and a nonempty η multiset.
long long lhs_factor(const UState& s);

/// One application of the genus-descent identity: emits every right-hand
/// term for the given state. Writing p = k + dp for the tail count of the
/// state being expanded, the rules are (split sums run over ORDERED tuples
/// of positive integers; prefactors are applied verbatim on top):
///
///   per factor η_{0,a}:      b1+b2=a       b1·b2        -> g-1, η_{1,b1} η_{0,b2}
///   per factor η_{1,a}:      b1+b2=a       b1·b2/2      -> g-1, η_{1,b1} η_{1,b2}
///                            b1+b2=a       p·b1·b2/6    -> g-1, p-1, η_{0,b1} η_{0,b2}
///                            b1+b2+b3=a    b1·b2·b3/9   -> g-2, η_{0,b1} η_{0,b2} η_{0,b3}
///   per pair {η_{0,a},η_{0,a'}}:           a+a'         -> g,   η_{0,a+a'}
///   per pair {η_{0,a},η_{1,a'}}:           a+a'         -> g,   η_{1,a+a'}
///   per pair {η_{1,a},η_{1,a'}}:           p·(a+a')/3   -> g,   p-1, η_{0,a+a'}
///                            b1+b2=a+a'    b1·b2/3      -> g-1, η_{0,b1} η_{0,b2}
///   per triple all label 1:                2·(a+a'+a'')/3 -> g, η_{0,a+a'+a''}
///
/// Every child also drops the ψ-power offset by one. Pairs and triples are
/// enumerated over positions, so multiset multiplicity is counted exactly
/// (two equal factors form one pair). Children that would land below genus 0
/// are dropped. Every emitted child strictly decreases (genus, #η)
/// lexicographically; this is checked on each emission.
std::vector<ExpansionTerm> expand_once(const UState& s,
                                       RuleMutation mutation = RuleMutation::none);

/// Canonicalizes the raw genus-0 correlator <τ_{n+dn,m} τ_{0,1}^{k+dk} τ_{0,0}^{l+dl}>_0.
/// While dk >= 3, three τ_{0,1} insertions trade for the factor (k+dk-2)/3,
/// one ψ power, and one τ_{0,0} insertion; the string equation then folds the
/// τ_{0,0} surplus into the ψ-power offset. Returns the accumulated factor and
/// the canonical key (m, dn - dl, dk). Applied to an already-canonical key it
/// returns factor 1 and the same key.
std::pair<KPoly, CorrelatorKey> normalize_correlator(
    int m, int dn, int dk, int dl, RuleMutation mutation = RuleMutation::none);

/// Genus-0 terminal case: U(0,n,m,p,q|∏η) is the correlator with one
/// τ_{0,1} per label-1 insertion and one τ_{0,0} per label-0 insertion
/// (weights are irrelevant at genus 0), normalized to the canonical key.
LinComb base_genus0(const UState& s, RuleMutation mutation = RuleMutation::none);

/// The three inputs of the genus-3 assembly, eta_count ∈ {2,3,4}:
/// genus 3, ψ-offset eta_count - 3, tail offset 0, η_{0,1} ^ eta_count.
UState assembly_input(int m, int eta_count);

/// Memoized reduction of U-states to genus-0 canonical correlators.
/// reduce() is a pure function of the state; the cache only shares work, so
/// results are independent of call order. Instances are not thread-safe;
/// use one per thread (values are freely shareable once returned).
class Reducer {
 public:
  explicit Reducer(RuleMutation mutation = RuleMutation::none) : mutation_(mutation) {}

  RuleMutation mutation() const { return mutation_; }

  /// Full reduction: genus 0 terminates via base_genus0, positive genus
  /// expands once and divides by lhs_factor. Memoized on the canonical state.
  const LinComb& reduce(const UState& s);

  /// U(3,n+1|η_{0,1}^4) - 3·U(3,n|η_{0,1}^3) + 3·U(3,n-1|η_{0,1}^2),
  /// which is 3!·<τ_{n,m} τ_{0,1}^k τ_{0,0}^l>_3 over genus-0 correlators.
  /// Each input must reduce to the single canonical key (m,-8,0); anything
  /// else is a hard failure.
  LinComb assemble_genus3(int m);

  struct ClosedFormVerdict {
    bool pass = false;
    std::array<LinComb, 2> assembled;  // indexed by m
    std::array<LinComb, 2> expected;   // (k+1)/5184 on key (m,-8,0)
  };
  /// Checks the closed-form prediction 3!·<τ>_3 = (1/1728)·<τ_{n-6,m} τ_{0,1}^{k+3} τ_{0,0}^l>_0
  /// for both m. The expected side always uses the unmutated rules.
  ClosedFormVerdict check_closed_form();

  using Cache = std::unordered_map<UState, LinComb, UStateHash>;
  const Cache& cache() const { return cache_; }

  /// Re-derives every cached positive-genus state from its children's cached
  /// values and compares with lhs_factor(s)·value(s). Returns the offending
  /// states, sorted; empty means every expansion identity holds.
  std::vector<UState> failed_expansion_identities() const;

 private:
  RuleMutation mutation_;
  Cache cache_;
};

}  // namespace spin3
