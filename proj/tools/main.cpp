#include "boxorient/io.hpp"

int main(int argc, char** argv) { return boxorient::cli_main(argc, argv); }
