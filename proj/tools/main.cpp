#include <iostream>

#include "pretzel/cli.hpp"

int main(int argc, char** argv) {
    return pretzel::run_cli(argc, argv, std::cout, std::cerr);
}
