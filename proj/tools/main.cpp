#include "cli.hpp"

int main(int argc, char** argv) { return rankcalc::cli::main_entry(argc, argv); }
