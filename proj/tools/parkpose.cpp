#include <iostream>

#include "parkpose/cli.hpp"

int main(int argc, char** argv) {
    return parkpose::cli::run(argc, argv, std::cout, std::cerr);
}
