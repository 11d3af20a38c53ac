#include <iostream>
#include <string>
#include <vector>

#include "lpa/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    const auto result = lpa::cli::run(args);
    std::cout << result.render();
    if (result.code != lpa::cli::ok) std::cerr << "lpa: " << result.message << "\n";
    return result.code;
}
