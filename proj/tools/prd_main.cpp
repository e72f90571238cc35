#include <iostream>

#include "prd/commands.hpp"

int main(int argc, char** argv) {
    return prd::cli::run(argc, argv, std::cout, std::cerr);
}
