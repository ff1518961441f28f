#include "ellrange/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <unistd.h>

int main(int argc, char** argv)
{
    ellrange::cli::RunOptions options;
    options.color = std::getenv("NO_COLOR") == nullptr && ::isatty(STDERR_FILENO) != 0;
    return ellrange::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr, options);
}
