#include <iostream>

#include "kinv/acceptance.hpp"

int main() { return kinv::acceptance::run_all(std::cout) ? 0 : 1; }
