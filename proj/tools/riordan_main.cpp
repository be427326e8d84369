#include <iostream>

#include "riordan/cli.hpp"

int main(int argc, char** argv) {
    return riordan::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
