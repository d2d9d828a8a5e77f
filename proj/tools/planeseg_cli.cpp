#include "planeseg/cli.hpp"

int main(int argc, char** argv) { return planeseg::cli_main(argc, argv); }
