#include "romik/selfcheck.hpp"

#include <iostream>

int main() {
    return romik::report_selfcheck(std::cout) ? 0 : 1;
}
