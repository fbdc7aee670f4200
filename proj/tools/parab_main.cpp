#include "parab/harness.hpp"

int main(int argc, char** argv) { return parab::harness::run_cli(argc, argv); }
