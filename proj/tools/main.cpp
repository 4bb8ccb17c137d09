#include <string>
#include <vector>

#include "tdrefine/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tdr::cli_main(args);
}
