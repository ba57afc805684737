#include "lenscalc/app.hpp"

#include <iostream>

int main(int argc, char **argv)
{
    return lenscalc::cli::run(argc, argv, std::cout, std::cerr);
}
