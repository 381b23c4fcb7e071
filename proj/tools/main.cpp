#include "fredombi/cli.hpp"

int main(int argc, char** argv) { return fredombi::run_cli(argc, argv); }
