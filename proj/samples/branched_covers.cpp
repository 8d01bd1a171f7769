// Prints |H_1| of the N-fold cyclic branched cover for every corpus knot and
// compares the growth rate with the Mahler measure.
#include <cmath>
#include <iomanip>
#include <iostream>

#include "kinv/invariants.hpp"
#include "kinv/knot_table.hpp"
#include "kinv/mahler.hpp"

int main() {
    for (const auto& [name, braid] : kinv::KnotTable::builtin().entries()) {
        const kinv::LaurentPoly delta = kinv::alexander_burau(braid);
        std::cout << name << ": Delta = " << delta << ", Mahler measure " << std::setprecision(10)
                  << kinv::mahler_measure_roots(delta) << '\n';
        for (int n = 2; n <= 7; ++n) {
            const kinv::RelativeInvariant q = kinv::q_relative(delta, n);
            std::cout << "  N=" << n << "  q=" << q.value << "  H_1=" << q.homology.to_string() << '\n';
        }
    }
}
