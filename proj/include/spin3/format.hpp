#pragma once

#include <string>

#include "spin3/state.hpp"

namespace spin3 {

std::string format_rational(const Rational& r);

/// Content-factored exact rendering, descending degree:
/// "(k+1)/120960", "19729(k+1)/125411328", "k/6", "5/6", "0".
std::string format_kpoly(const KPoly& p);

/// "<m=0, shift=-8, r=0>"
std::string format_key(const CorrelatorKey& key);

/// Terms in key order joined with " + " / " - "; "0" when empty.
std::string format_lincomb(const LinComb& lc);

}  // namespace spin3
