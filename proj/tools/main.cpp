#include "charsum_cli.hpp"

int main(int argc, char** argv) { return charsum::cli::run(argc, argv); }
