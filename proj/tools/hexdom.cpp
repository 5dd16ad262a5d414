#include <string>
#include <vector>

#include "hexdom/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hexdom::run_cli(args);
}
