#include <iostream>

#include "clawkit/cli.hpp"

int main(int argc, char** argv) {
    return clawkit::run_cli(argc, argv, std::cin, std::cout);
}
