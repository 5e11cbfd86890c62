#include "hwiener/cli.hpp"

int main(int argc, char** argv) { return hwiener::cli::main_entry(argc, argv); }
