#include "cli.hpp"

int main(int argc, char** argv) { return sfn::run_cli(argc, argv); }
