#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <unistd.h>

int main(int argc, char** argv)
{
    const char* no_color = std::getenv("NO_COLOR");
    const bool color = (no_color == nullptr || *no_color == '\0') && isatty(STDOUT_FILENO);
    return petersen::cli::run({argv + 1, argv + argc}, std::cout, std::cerr, color);
}
