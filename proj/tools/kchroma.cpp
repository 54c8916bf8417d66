#include "kchroma/cli.hpp"

int main(int argc, char** argv) { return kchroma::cli::run(argc, argv); }
