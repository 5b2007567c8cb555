#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) { return bessel_series::cli::run_cli(argc, argv, std::cout, std::cerr); }
