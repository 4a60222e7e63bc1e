#include <iostream>

#include "slicecheck/cli/cli.hpp"

int main(int argc, char** argv) {
    return slicecheck::cli::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
