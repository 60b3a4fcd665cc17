#include <iostream>

#include "mrr/cli.h"

int main(int argc, char** argv) { return mrr::RunCli(argc, argv, std::cout, std::cerr); }
