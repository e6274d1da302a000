#include <iostream>

#include "cli.hpp"
#include "jetob/parallel.hpp"

int main(int argc, char** argv) {
    jetob::configure_threads_from_env();
    return jetob::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
