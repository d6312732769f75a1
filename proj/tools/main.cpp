#include "frameinv/cli.hpp"

int main(int argc, char** argv) { return frameinv::run_cli(argc, argv); }
