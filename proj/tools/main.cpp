#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "commands.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    const bool color = ::isatty(STDOUT_FILENO) != 0 && std::getenv("DUNKL_NO_COLOR") == nullptr;
    return dunkl::cli::run(args, std::cout, std::cerr, color);
}
