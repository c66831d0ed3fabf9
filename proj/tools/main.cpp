// main.cpp — qfridge executable

#include <iostream>

#include "qfridge/cli.hpp"

int main(int argc, char** argv) { return qfridge::cli::run(argc, argv, std::cout, std::cerr); }
