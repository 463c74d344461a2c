#include <iostream>

#include "orbmeas/cli/app.hpp"

int main(int argc, char** argv) { return orbmeas::cli::run(argc, argv, std::cout, std::cerr); }
