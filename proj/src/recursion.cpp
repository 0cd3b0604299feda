#include "spin3/recursion.hpp"

#include <algorithm>

namespace spin3 {

namespace {

void require_expandable(const UState& s) {
  if (s.genus < 1)
    throw RecursionInapplicableError("recursion inapplicable: expansion requires genus >= 1");
  if (s.etas.empty())
    throw RecursionInapplicableError(
        "recursion inapplicable: no eta insertions at positive genus");
}

}  // namespace

long long lhs_factor(const UState& s) {
  require_expandable(s);
  const long long t = static_cast<long long>(s.etas.size());
  return s.etas.total_weight() * (2 * s.genus + t - 1);
}

std::vector<ExpansionTerm> expand_once(const UState& s, RuleMutation mutation) {
  require_expandable(s);
  const auto& f = s.etas.factors();
  const int t = static_cast<int>(f.size());
  const KPoly tail = KPoly::variable() + KPoly(Rational(s.dp));  // p = k + dp
  const Rational p_split_den(mutation == RuleMutation::p_split_prefactor ? 3 : 6);

  std::vector<ExpansionTerm> out;

  const auto without = [&](int skip1, int skip2 = -1, int skip3 = -1) {
    std::vector<EtaFactor> rest;
    rest.reserve(f.size() + 2);
    for (int i = 0; i < t; ++i)
      if (i != skip1 && i != skip2 && i != skip3) rest.push_back(f[i]);
    return rest;
  };
  const auto emit = [&](KPoly coeff, int genus, int dp, std::vector<EtaFactor> etas) {
    UState child{genus, s.dn - 1, s.m, dp, EtaMultiset(std::move(etas))};
    const bool decreases =
        child.genus < s.genus || (child.genus == s.genus && child.etas.size() < s.etas.size());
    if (!decreases)
      throw std::logic_error("expansion did not decrease the (genus, #eta) measure");
    out.push_back({std::move(coeff), std::move(child)});
  };

  // single-factor rules
  for (int j = 0; j < t; ++j) {
    const int a = f[j].weight;
    if (f[j].label == 0) {
      for (int b1 = 1; b1 < a; ++b1) {
        const int b2 = a - b1;
        auto rest = without(j);
        rest.push_back({1, b1});
        rest.push_back({0, b2});
        emit(KPoly(Rational(b1 * b2)), s.genus - 1, s.dp, std::move(rest));
      }
    } else {
      for (int b1 = 1; b1 < a; ++b1) {
        const int b2 = a - b1;
        {
          auto rest = without(j);
          rest.push_back({1, b1});
          rest.push_back({1, b2});
          emit(KPoly(Rational(b1 * b2, 2)), s.genus - 1, s.dp, std::move(rest));
        }
        {
          auto rest = without(j);
          rest.push_back({0, b1});
          rest.push_back({0, b2});
          emit(tail * (Rational(b1 * b2) / p_split_den), s.genus - 1, s.dp - 1,
               std::move(rest));
        }
      }
      if (s.genus >= 2) {  // two-genus drop; below that the target space is empty
        for (int b1 = 1; b1 < a; ++b1)
          for (int b2 = 1; b1 + b2 < a; ++b2) {
            const int b3 = a - b1 - b2;
            auto rest = without(j);
            rest.push_back({0, b1});
            rest.push_back({0, b2});
            rest.push_back({0, b3});
            emit(KPoly(Rational(b1 * b2 * b3, 9)), s.genus - 2, s.dp, std::move(rest));
          }
      }
    }
  }

  // pair rules (unordered position pairs)
  for (int j = 0; j < t; ++j)
    for (int k2 = j + 1; k2 < t; ++k2) {
      const int a = f[j].weight + f[k2].weight;
      if (f[j].label == 0 && f[k2].label == 0) {
        auto rest = without(j, k2);
        rest.push_back({0, a});
        emit(KPoly(Rational(a)), s.genus, s.dp, std::move(rest));
      } else if (f[j].label != f[k2].label) {
        auto rest = without(j, k2);
        rest.push_back({1, a});
        emit(KPoly(Rational(a)), s.genus, s.dp, std::move(rest));
      } else {
        {
          auto rest = without(j, k2);
          rest.push_back({0, a});
          emit(tail * Rational(a, 3), s.genus, s.dp - 1, std::move(rest));
        }
        for (int b1 = 1; b1 < a; ++b1) {
          const int b2 = a - b1;
          auto rest = without(j, k2);
          rest.push_back({0, b1});
          rest.push_back({0, b2});
          emit(KPoly(Rational(b1 * b2, 3)), s.genus - 1, s.dp, std::move(rest));
        }
      }
    }

  // triple rule (all label 1)
  for (int j = 0; j < t; ++j)
    for (int k2 = j + 1; k2 < t; ++k2)
      for (int l3 = k2 + 1; l3 < t; ++l3) {
        if (f[j].label != 1 || f[k2].label != 1 || f[l3].label != 1) continue;
        const int a = f[j].weight + f[k2].weight + f[l3].weight;
        auto rest = without(j, k2, l3);
        rest.push_back({0, a});
        emit(KPoly(Rational(2 * a, 3)), s.genus, s.dp, std::move(rest));
      }

  return out;
}

std::pair<KPoly, CorrelatorKey> normalize_correlator(int m, int dn, int dk, int dl,
                                                     RuleMutation mutation) {
  const int drop = mutation == RuleMutation::triple_reduction_factor ? 1 : 2;
  KPoly factor(Rational(1));
  while (dk >= 3) {
    factor *= (KPoly::variable() + KPoly(Rational(dk - drop))) / Rational(3);
    dk -= 3;
    --dn;
    ++dl;
  }
  return {std::move(factor), CorrelatorKey{m, dn - dl, dk}};
}

LinComb base_genus0(const UState& s, RuleMutation mutation) {
  if (s.genus != 0)
    throw std::invalid_argument("base case requires a genus-0 state");
  const int dk = s.dp + s.etas.count_label(1);
  const int dl = s.etas.count_label(0);
  auto [factor, key] = normalize_correlator(s.m, s.dn, dk, dl, mutation);
  return LinComb::single(key, std::move(factor));
}

UState assembly_input(int m, int eta_count) {
  if (eta_count < 2 || eta_count > 4)
    throw std::invalid_argument("assembly inputs carry 2, 3 or 4 eta insertions");
  return UState{3, eta_count - 3, m, 0, EtaMultiset::repeat({0, 1}, eta_count)};
}

const LinComb& Reducer::reduce(const UState& state) {
  UState s = canonical_ustate(state);
  if (s.genus < 0)
    throw std::invalid_argument("negative-genus states are identically zero, not reducible");
  if (const auto it = cache_.find(s); it != cache_.end()) return it->second;

  LinComb result;
  if (s.genus == 0) {
    result = base_genus0(s, mutation_);
  } else {
    LinComb sum;
    for (const auto& term : expand_once(s, mutation_))
      sum += reduce(term.child).scaled(term.coeff);
    result = sum.scaled(Rational(1, lhs_factor(s)));
  }
  return cache_.emplace(std::move(s), std::move(result)).first->second;
}

LinComb Reducer::assemble_genus3(int m) {
  const CorrelatorKey target{m, -8, 0};
  std::array<LinComb, 3> inputs;
  for (int eta_count = 2; eta_count <= 4; ++eta_count) {
    const LinComb& value = reduce(assembly_input(m, eta_count));
    if (value.size() != 1 || value.find(target) == nullptr)
      throw std::logic_error("assembly input did not reduce to the single key (m,-8,0)");
    inputs[static_cast<std::size_t>(eta_count - 2)] = value;
  }
  const Rational middle(mutation_ == RuleMutation::assembly_middle_sign ? 3 : -3);
  return inputs[2] + inputs[1].scaled(middle) + inputs[0].scaled(Rational(3));
}

Reducer::ClosedFormVerdict Reducer::check_closed_form() {
  ClosedFormVerdict verdict;
  verdict.pass = true;
  for (int m = 0; m <= 1; ++m) {
    // 3!·<τ>_3 = (1/12^3)·<τ_{n-6,m} τ_{0,1}^{k+3} τ_{0,0}^l>_0, canonicalized
    auto [factor, key] = normalize_correlator(m, -6, 3, 0, RuleMutation::none);
    const Rational twelve_cubed(12 * 12 * 12);
    verdict.expected[static_cast<std::size_t>(m)] =
        LinComb::single(key, factor / twelve_cubed);
    verdict.assembled[static_cast<std::size_t>(m)] = assemble_genus3(m);
    verdict.pass = verdict.pass && verdict.assembled[static_cast<std::size_t>(m)] ==
                                       verdict.expected[static_cast<std::size_t>(m)];
  }
  return verdict;
}

std::vector<UState> Reducer::failed_expansion_identities() const {
  std::vector<UState> states;
  states.reserve(cache_.size());
  for (const auto& [s, value] : cache_)
    if (s.genus >= 1) states.push_back(s);
  std::sort(states.begin(), states.end());

  std::vector<UState> failed;
  for (const auto& s : states) {
    LinComb rhs;
    bool complete = true;
    for (const auto& term : expand_once(s, mutation_)) {
      const auto it = cache_.find(term.child);
      if (it == cache_.end()) {
        complete = false;
        break;
      }
      rhs += it->second.scaled(term.coeff);
    }
    const LinComb lhs = cache_.at(s).scaled(Rational(lhs_factor(s)));
    if (!complete || lhs != rhs) failed.push_back(s);
  }
  return failed;
}

}  // namespace spin3
