#include "ned/cli.hpp"

int main(int argc, char** argv) { return ned::run_cli(argc, argv); }
