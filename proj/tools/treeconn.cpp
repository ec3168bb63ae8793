#include <iostream>

#include "treeconn_cli/app.hpp"

int main(int argc, char** argv) {
  return treeconn::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
