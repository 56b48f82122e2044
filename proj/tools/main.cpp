#include <vector>

#include "pascaldet/commands.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return pascaldet::run_command(args);
}
