#include <iostream>
#include <vector>

#include "pierce/cli.hpp"

int main(int argc, char** argv) {
    return pierce::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                            std::cerr);
}
