#include "romik/zroot2.hpp"

#include <cassert>
#include <ostream>

namespace romik {

int ZRoot2::sign() const {
    int sr = rat.sign();
    int si = irr.sign();
    if (si == 0) return sr;
    if (sr == 0) return si;
    if (sr == si) return sr;
    // Opposite signs: |rat| vs |irr|*sqrt(2) decided by rat^2 vs 2*irr^2.
    int sn = norm().sign();
    assert(sn != 0 && "sqrt(2) is irrational");
    return sn > 0 ? sr : si;
}

std::string ZRoot2::to_string() const {
    if (irr.is_zero()) return rat.to_string();
    std::string s;
    if (!rat.is_zero()) s = rat.to_string();
    if (irr.sign() < 0) {
        s += s.empty() ? "-" : " - ";
    } else if (!s.empty()) {
        s += " + ";
    }
    Rational ai = irr.abs();
    if (ai != Rational(1)) s += ai.to_string() + "*";
    s += "sqrt(2)";
    return s;
}

std::ostream& operator<<(std::ostream& os, const ZRoot2& z) {
    return os << z.to_string();
}

} // namespace romik
