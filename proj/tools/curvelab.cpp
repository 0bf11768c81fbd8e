#include <iostream>

#include "curvelab/service/cli.hpp"

int main(int argc, char** argv) { return curvelab::service::cli_main(argc, argv, std::cout, std::cerr); }
