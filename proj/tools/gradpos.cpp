#include "gradpos/cli.hpp"

int main(int argc, char** argv) { return gradpos::cli::run(argc, argv); }
