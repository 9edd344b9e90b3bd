#include <cstdlib>
#include <iostream>
#include <string>

#include "wschub/selftest.hpp"

int main(int argc, char** argv) {
    unsigned long long seed = 20240915ULL;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--seed" && i + 1 < argc) seed = std::stoull(argv[++i]);
    }
    return wschub::print_acceptance(std::cout, seed);
}
