#include <iostream>
#include <string>
#include <vector>

#include "mproj/cli.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv, argv + argc);
    return mproj::cli::run(args, std::cout, std::cerr);
}
