#include "twr/cli.hpp"

int main(int argc, char** argv) { return twr::run_cli(argc, argv); }
