// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "csd/cli.hpp"

int main(int argc, char** argv) {
    return csd::run_cli(argc, argv, std::cout, std::cerr);
}
