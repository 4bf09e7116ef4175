#include "fibered/cli.hpp"

int main(int argc, char** argv) { return fibered::cli_main(argc, argv); }
