#include <cstdlib>
#include <iostream>
#include <string>

#include "motstats/acceptance.hpp"

int main(int argc, char** argv) {
    using namespace motstats;
    if (argc > 2) {
        std::cerr << "usage: acceptance [criterion-number]\n";
        return 2;
    }
    if (argc == 2) {
        int index = std::atoi(argv[1]);
        if (index < 1 || index > acceptance_criteria_count()) {
            std::cerr << "criterion number out of range\n";
            return 2;
        }
        return run_acceptance_criterion(index, std::cout) ? 0 : 1;
    }
    return run_acceptance(std::cout) ? 0 : 1;
}
