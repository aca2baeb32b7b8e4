#include "qroots/cli.hpp"

int main(int argc, char** argv) { return qroots::cli::run_cli(argc, argv); }
