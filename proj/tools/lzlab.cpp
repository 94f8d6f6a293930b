#include "lzlab/commands.hpp"

int main(int argc, char** argv) { return lzlab::cli::run(argc, argv); }
