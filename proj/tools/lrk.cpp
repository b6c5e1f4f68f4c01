#include "lrk/cli.hpp"

int main(int argc, char** argv) { return lrk::cli::main(argc, argv); }
