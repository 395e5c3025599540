#include "hyperphase/cli.hpp"

int main(int argc, char** argv) { return hyperphase::cli_dispatch(argc, argv); }
