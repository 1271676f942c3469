#include "cli.hpp"

int main(int argc, char** argv) { return dualgr::cli::run(argc, argv, std::cout, std::cerr); }
