#include "quivarr/cli.hpp"

int main(int argc, char** argv) { return quivarr::run_cli(argc, argv); }
