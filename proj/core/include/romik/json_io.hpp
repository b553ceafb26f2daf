#pragma once

#include "romik/markoff.hpp"

#include <string>

namespace romik {

// Exact JSON forms: integers as decimal strings, Rational = {num, den},
// ZRoot2 = {rat, irr}, QuadTower = {base, coeff, disc}.
std::string json_of(const Rational& r);
std::string json_of(const ZRoot2& z);
std::string json_of(const QuadTower& t);
std::string json_of(const PythTriple& t);
std::string json_of(const MarkoffTriple& t);
std::string json_of(const DigitWord& w);

Rational rational_from_json(const std::string& text);
ZRoot2 zroot2_from_json(const std::string& text);
QuadTower quadtower_from_json(const std::string& text);
PythTriple triple_from_json(const std::string& text);

} // namespace romik
