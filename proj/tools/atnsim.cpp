#include "atn/cli.hpp"

int main(int argc, char** argv) { return atn::cli::run(argc, argv); }
