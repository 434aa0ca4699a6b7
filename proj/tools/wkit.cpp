#include "wkit/cli.hpp"

int main(int argc, char** argv) { return wkit::cli::run(argc, argv); }
