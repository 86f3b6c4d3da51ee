#include "anho/cli.hpp"

int main(int argc, char** argv) { return anho::cli::run(argc, argv); }
