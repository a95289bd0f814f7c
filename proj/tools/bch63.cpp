#include <iostream>
#include <string>
#include <vector>

#include "bch63_cli.hpp"

int main(int argc, char** argv) {
    return bch::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
