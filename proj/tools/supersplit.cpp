#include "supersplit/commands.hpp"

int main(int argc, char** argv) { return supersplit::cli::run_cli(argc, argv); }
