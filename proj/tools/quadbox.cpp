#include <iostream>
#include <string>
#include <vector>

#include "quadbox/cli.hpp"

int main(int argc, char** argv) {
    return quadbox::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
