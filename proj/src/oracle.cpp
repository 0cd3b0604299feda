#include "spin3/oracle.hpp"

#include <algorithm>
#include <set>

namespace spin3 {

ConcreteReducer::ConcreteReducer(long long k0) : k0_(k0) {
  if (k0 < 0) throw std::invalid_argument("concrete tail count k0 must be >= 0");
}

const ConcreteComb& ConcreteReducer::reduce(const UState& state) {
  UState s = canonical_ustate(state);
  if (s.genus < 0)
    throw std::invalid_argument("negative-genus states are identically zero, not reducible");
  if (const auto it = cache_.find(s); it != cache_.end()) return it->second;
  ConcreteComb result = reduce_uncached(s);
  return cache_.emplace(std::move(s), std::move(result)).first->second;
}

ConcreteComb ConcreteReducer::reduce_uncached(const UState& s) {
  const long long tail = k0_ + s.dp;
  if (tail < 0)
    throw NegativeTailCountError("concrete tail count " + std::to_string(tail) +
                                 " is negative: k0=" + std::to_string(k0_) +
                                 " too small for dp=" + std::to_string(s.dp));

  if (s.genus == 0) {
    long long exponent = tail + s.etas.count_label(1);
    long long dl = s.etas.count_label(0);
    int dn = s.dn;
    Rational factor(1);
    while (exponent >= k0_ + 3) {  // same stopping point as the symbolic canonical form
      factor *= Rational(exponent - 2, 3);
      exponent -= 3;
      --dn;
      ++dl;
    }
    ConcreteComb out;
    out[{s.m, dn - static_cast<int>(dl), exponent}] = factor;
    return out;
  }

  if (s.etas.empty())
    throw RecursionInapplicableError(
        "recursion inapplicable: no eta insertions at positive genus");

  ConcreteComb acc;
  const auto absorb = [&](const Rational& mult, int genus, int dp,
                          std::vector<EtaFactor> etas) {
    if (mult.is_zero() || genus < 0) return;
    const UState child{genus, s.dn - 1, s.m, dp, EtaMultiset(std::move(etas))};
    for (const auto& [key, value] : reduce(child)) {
      auto [it, inserted] = acc.try_emplace(key, mult * value);
      if (!inserted) {
        it->second += mult * value;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  };
  const auto& f = s.etas.factors();
  const int t = static_cast<int>(f.size());
  const auto without = [&](int skip1, int skip2 = -1, int skip3 = -1) {
    std::vector<EtaFactor> rest;
    rest.reserve(f.size() + 2);
    for (int i = 0; i < t; ++i)
      if (i != skip1 && i != skip2 && i != skip3) rest.push_back(f[i]);
    return rest;
  };

  for (int j = 0; j < t; ++j) {
    const int a = f[j].weight;
    if (f[j].label == 0) {
      for (int b1 = 1; b1 < a; ++b1) {
        const int b2 = a - b1;
        auto rest = without(j);
        rest.push_back({1, b1});
        rest.push_back({0, b2});
        absorb(Rational(b1 * b2), s.genus - 1, s.dp, std::move(rest));
      }
    } else {
      for (int b1 = 1; b1 < a; ++b1) {
        const int b2 = a - b1;
        {
          auto rest = without(j);
          rest.push_back({1, b1});
          rest.push_back({1, b2});
          absorb(Rational(b1 * b2, 2), s.genus - 1, s.dp, std::move(rest));
        }
        {
          auto rest = without(j);
          rest.push_back({0, b1});
          rest.push_back({0, b2});
          absorb(Rational(tail * b1 * b2, 6), s.genus - 1, s.dp - 1, std::move(rest));
        }
      }
      for (int b1 = 1; b1 < a; ++b1)
        for (int b2 = 1; b1 + b2 < a; ++b2) {
          const int b3 = a - b1 - b2;
          auto rest = without(j);
          rest.push_back({0, b1});
          rest.push_back({0, b2});
          rest.push_back({0, b3});
          absorb(Rational(b1 * b2 * b3, 9), s.genus - 2, s.dp, std::move(rest));
        }
    }
  }
  for (int j = 0; j < t; ++j)
    for (int k2 = j + 1; k2 < t; ++k2) {
      const int a = f[j].weight + f[k2].weight;
      if (f[j].label == 0 && f[k2].label == 0) {
        auto rest = without(j, k2);
        rest.push_back({0, a});
        absorb(Rational(a), s.genus, s.dp, std::move(rest));
      } else if (f[j].label != f[k2].label) {
        auto rest = without(j, k2);
        rest.push_back({1, a});
        absorb(Rational(a), s.genus, s.dp, std::move(rest));
      } else {
        {
          auto rest = without(j, k2);
          rest.push_back({0, a});
          absorb(Rational(tail * a, 3), s.genus, s.dp - 1, std::move(rest));
        }
        for (int b1 = 1; b1 < a; ++b1) {
          const int b2 = a - b1;
          auto rest = without(j, k2);
          rest.push_back({0, b1});
          rest.push_back({0, b2});
          absorb(Rational(b1 * b2, 3), s.genus - 1, s.dp, std::move(rest));
        }
      }
    }
  for (int j = 0; j < t; ++j)
    for (int k2 = j + 1; k2 < t; ++k2)
      for (int l3 = k2 + 1; l3 < t; ++l3) {
        if (f[j].label != 1 || f[k2].label != 1 || f[l3].label != 1) continue;
        const int a = f[j].weight + f[k2].weight + f[l3].weight;
        auto rest = without(j, k2, l3);
        rest.push_back({0, a});
        absorb(Rational(2 * a, 3), s.genus, s.dp, std::move(rest));
      }

  const Rational divisor(lhs_factor(s));
  ConcreteComb out;
  for (auto& [key, value] : acc) out.emplace(key, value / divisor);
  return out;
}

OracleRun run_oracle(const UState& s, const std::vector<long long>& k_values) {
  if (k_values.empty()) throw std::invalid_argument("oracle needs at least one tail count");
  std::set<long long> seen;
  for (const long long k0 : k_values) {
    if (k0 < 0) throw std::invalid_argument("oracle tail counts must be >= 0");
    if (!seen.insert(k0).second)
      throw std::invalid_argument("oracle tail counts must be distinct");
  }
  OracleRun run;
  run.k_values = k_values;
  run.per_value.reserve(k_values.size());
  for (const long long k0 : k_values) {
    ConcreteReducer concrete(k0);
    run.per_value.push_back(concrete.reduce(s));
  }
  return run;
}

InterpolationVerdict interpolation_check(Reducer& reducer, const UState& s,
                                         const std::vector<long long>& k_samples) {
  const LinComb& symbolic = reducer.reduce(s);
  int max_degree = 0;
  for (const auto& [key, poly] : symbolic.terms())
    max_degree = std::max(max_degree, poly.degree());
  if (static_cast<int>(k_samples.size()) < max_degree + 1)
    throw std::invalid_argument("insufficient samples: degree " + std::to_string(max_degree) +
                                " needs " + std::to_string(max_degree + 1) + ", got " +
                                std::to_string(k_samples.size()));

  const OracleRun run = run_oracle(s, k_samples);
  for (std::size_t i = 0; i < run.k_values.size(); ++i) {
    const long long k0 = run.k_values[i];

    ConcreteComb evaluated;
    for (const auto& [key, poly] : symbolic.terms()) {
      const Rational value = poly.eval(Rational(k0));
      if (!value.is_zero()) evaluated[{key.m, key.shift, k0 + key.r}] = value;
    }

    if (evaluated != run.per_value[i]) {
      InterpolationVerdict verdict;
      verdict.pass = false;
      verdict.detail = "mismatch at k0=" + std::to_string(k0) + ": symbolic evaluates to {";
      for (const auto& [key, value] : evaluated)
        verdict.detail += " " + value.str() + " on exp " + std::to_string(key.tau01_exponent);
      verdict.detail += " }, concrete rerun gives {";
      for (const auto& [key, value] : run.per_value[i])
        verdict.detail += " " + value.str() + " on exp " + std::to_string(key.tau01_exponent);
      verdict.detail += " }";
      return verdict;
    }
  }
  return {true, std::to_string(k_samples.size()) + " samples agree on " +
                    std::to_string(symbolic.size()) + " key(s)"};
}

}  // namespace spin3
