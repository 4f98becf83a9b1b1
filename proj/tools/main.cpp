#include "cli.hpp"

int main(int argc, char** argv) { return hotspots::cli::run(argc, argv); }
