#include "trinion/cli.hpp"

int main(int argc, char** argv) { return trinion::cli::run(argc, argv); }
