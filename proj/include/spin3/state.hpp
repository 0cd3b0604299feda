#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "spin3/kpoly.hpp"

namespace spin3 {

/// One divisor-condition insertion η_{label,weight}: spin label in {0,1},
/// divisor multiplicity weight >= 1.
struct EtaFactor {
  int label = 0;
  int weight = 1;
  friend auto operator<=>(const EtaFactor&, const EtaFactor&) = default;
};

/// Multiset of η insertions kept sorted by (label, weight); the sorted order
/// is the unique canonical form, so equal content is fieldwise equal.
class EtaMultiset {
 public:
  EtaMultiset() = default;
  explicit EtaMultiset(std::vector<EtaFactor> factors);
  static EtaMultiset repeat(EtaFactor factor, int count);

  bool empty() const { return factors_.empty(); }
  std::size_t size() const { return factors_.size(); }
  const std::vector<EtaFactor>& factors() const { return factors_; }
  int count_label(int label) const;
  /// Sum of all weights (the Σ a_i of the recursion's left-hand factor).
  long long total_weight() const;

  friend auto operator<=>(const EtaMultiset&, const EtaMultiset&) = default;

 private:
  std::vector<EtaFactor> factors_;
};

/// Argument tuple of a U-number. The ψ-power and τ_{0,1}-tail count are
/// offsets dn, dp against the formal symbols n and k; the τ_{0,0}-tail count
/// is structurally pinned to the formal symbol l (the recursion never moves
/// it), so no offset field exists for it.
struct UState {
  int genus = 0;
  int dn = 0;
  int m = 0;   // spin label of the descendant point
  int dp = 0;  // tail count is k + dp
  EtaMultiset etas;
  friend auto operator<=>(const UState&, const UState&) = default;
};

/// Returns the state with its η multiset in canonical sorted order.
/// Idempotent; all other fields are untouched.
UState canonical_ustate(UState s);

/// FNV-1a over all fields; matches UState equality.
struct UStateHash {
  std::size_t operator()(const UState& s) const noexcept;
};

/// Canonical genus-0 correlator symbol <τ_{n+shift,m} τ_{0,1}^{k+r} τ_{0,0}^l>_0.
/// Canonical form keeps r <= 2 (offsets already below 3, including negative
/// ones, stay as-is) and the τ_{0,0} exponent at exactly l.
struct CorrelatorKey {
  int m = 0;
  int shift = 0;
  int r = 0;
  friend auto operator<=>(const CorrelatorKey&, const CorrelatorKey&) = default;
};

/// Finite map CorrelatorKey -> KPoly, the result type of every reduction.
/// Zero coefficients are pruned eagerly; no stored term is ever zero.
class LinComb {
 public:
  LinComb() = default;
  static LinComb single(const CorrelatorKey& key, KPoly coeff);

  void add(const CorrelatorKey& key, const KPoly& coeff);
  LinComb& operator+=(const LinComb& other);
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  LinComb scaled(const KPoly& c) const;
  LinComb scaled(const Rational& c) const { return scaled(KPoly(c)); }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<CorrelatorKey, KPoly>& terms() const { return terms_; }
  /// Coefficient on key, or nullptr when absent.
  const KPoly* find(const CorrelatorKey& key) const;

  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  std::map<CorrelatorKey, KPoly> terms_;
};

}  // namespace spin3
