#include "linecover/cli.hpp"

int main(int argc, char** argv) { return linecover::cli::run(argc, argv); }
