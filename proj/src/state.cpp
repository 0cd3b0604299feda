#include "spin3/state.hpp"

#include <algorithm>
#include <stdexcept>

namespace spin3 {

EtaMultiset::EtaMultiset(std::vector<EtaFactor> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    if (f.label != 0 && f.label != 1)
      throw std::invalid_argument("eta label must be 0 or 1");
    if (f.weight < 1) throw std::invalid_argument("eta weight must be >= 1");
  }
  std::sort(factors_.begin(), factors_.end());
}

EtaMultiset EtaMultiset::repeat(EtaFactor factor, int count) {
  if (count < 0) throw std::invalid_argument("eta repeat count must be >= 0");
  return EtaMultiset(std::vector<EtaFactor>(static_cast<std::size_t>(count), factor));
}

int EtaMultiset::count_label(int label) const {
  int n = 0;
  for (const auto& f : factors_)
    if (f.label == label) ++n;
  return n;
}

long long EtaMultiset::total_weight() const {
  long long sum = 0;
  for (const auto& f : factors_) sum += f.weight;
  return sum;
}

UState canonical_ustate(UState s) {
  s.etas = EtaMultiset(s.etas.factors());
  return s;
}

std::size_t UStateHash::operator()(const UState& s) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  const auto mix = [&h](std::int64_t v) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ull;
  };
  mix(s.genus);
  mix(s.dn);
  mix(s.m);
  mix(s.dp);
  for (const auto& f : s.etas.factors()) {
    mix(f.label);
    mix(f.weight);
  }
  return static_cast<std::size_t>(h);
}

LinComb LinComb::single(const CorrelatorKey& key, KPoly coeff) {
  LinComb out;
  out.add(key, coeff);
  return out;
}

void LinComb::add(const CorrelatorKey& key, const KPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LinComb& LinComb::operator+=(const LinComb& other) {
  for (const auto& [key, coeff] : other.terms_) add(key, coeff);
  return *this;
}

LinComb LinComb::scaled(const KPoly& c) const {
  LinComb out;
  if (c.is_zero()) return out;
  for (const auto& [key, coeff] : terms_) out.add(key, coeff * c);
  return out;
}

const KPoly* LinComb::find(const CorrelatorKey& key) const {
  const auto it = terms_.find(key);
  return it == terms_.end() ? nullptr : &it->second;
}

}  // namespace spin3
