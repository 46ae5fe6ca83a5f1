#include "qpst/cli.hpp"

int main(int argc, char** argv) { return qpst::cli::run(argc, argv); }
