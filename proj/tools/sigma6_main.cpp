#include "sigma6/cli.hpp"

int main(int argc, char** argv) { return sigma6::run_cli(argc, argv); }
