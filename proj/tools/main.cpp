#include "cli_main.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return taufan::cli_main(argc, argv, std::cout, std::cerr);
}
