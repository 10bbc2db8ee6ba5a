#include <iostream>

#include "weier/cli.hpp"

int main(int argc, char **argv)
{
    return weier::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
