#include "bhlab/cli.hpp"

int main(int argc, char** argv) { return bhlab::cli::run(argc, argv); }
