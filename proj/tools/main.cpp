#include "cli/cli.hpp"

int main(int argc, char** argv) { return tbnet::cli::run(argc, argv); }
