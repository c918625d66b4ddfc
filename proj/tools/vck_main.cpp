#include "vck/cli.hpp"

int main(int argc, char** argv) { return vck::run_cli_main(argc, argv); }
