#include "slme/run.hpp"

int main(int argc, char** argv) { return slme::run_cli(argc, argv); }
