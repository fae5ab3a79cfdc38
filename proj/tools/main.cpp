#include "cli.hpp"

int main(int argc, char** argv) { return synsq::cli::run_cli(argc, argv); }
