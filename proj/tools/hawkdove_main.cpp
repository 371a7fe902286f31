#include "hawkdove/cli.hpp"

int main(int argc, char** argv) { return hawkdove::cli_main(argc, argv); }
