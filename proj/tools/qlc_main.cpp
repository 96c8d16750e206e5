#include "qlc/cli.hpp"

int main(int argc, char** argv) { return qlc::cli::run(argc, argv); }
