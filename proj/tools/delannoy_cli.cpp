#include <delannoy/cli.hpp>

int main(int argc, char** argv) { return delannoy::cli::run(argc, argv); }
