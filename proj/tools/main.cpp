#include <iostream>

#include "smsvoice/cli.hpp"

int main(int argc, char** argv) { return smsvoice::cli::run(argc, argv, std::cout, std::cerr); }
