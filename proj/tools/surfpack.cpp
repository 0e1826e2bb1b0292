#include "surfpack/cli.hpp"

int main(int argc, char** argv) { return surfpack::cli_main(argc, argv); }
