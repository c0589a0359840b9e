#include "miortho/acceptance.hpp"

#include <iostream>

int main() {
    return miortho::runAcceptanceSuite(std::cout) ? 0 : 1;
}
