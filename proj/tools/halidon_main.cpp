#include "halidon/cli.hpp"

int main(int argc, char** argv) { return halidon::cli::run(argc, argv); }
