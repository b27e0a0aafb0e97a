#include "hookpath/cli.hpp"

int main(int argc, char** argv) { return hookpath::cli_main(argc, argv); }
