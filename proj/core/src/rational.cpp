#include "romik/rational.hpp"

#include <ostream>

namespace romik {

std::string Rational::to_string() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

} // namespace romik
