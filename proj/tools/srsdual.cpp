#include <iostream>

#include "srsdual/cli.hpp"

int main(int argc, char** argv) {
    return srsdual::cli::run(argc, argv, std::cout, std::cerr);
}
