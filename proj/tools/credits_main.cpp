#include <iostream>

#include "credits/cli.hpp"

int main(int argc, char** argv)
{
  return credits::cli::run(argc, argv, std::cout, std::cerr);
}
