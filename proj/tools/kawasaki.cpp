#include "kawasaki/harness.hpp"

int main(int argc, char** argv) { return kawasaki::cli_main(argc, argv); }
