#include "sl2c_cli.hpp"

int main(int argc, char** argv) { return sl2c::cli::main_with_args(argc, argv); }
