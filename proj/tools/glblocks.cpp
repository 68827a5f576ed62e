#include "glblocks/cli.hpp"

int main(int argc, char** argv) { return glblocks::cli::run(argc, argv); }
