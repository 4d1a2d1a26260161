#include "lastzero/cli.hpp"

int main(int argc, char** argv) { return lastzero::cli::run(argc, argv); }
