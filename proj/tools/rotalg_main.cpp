#include <vector>

#include "rotalg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rotalg::cli::run(args);
}
