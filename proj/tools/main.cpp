#include <hellycone/cli.hpp>

int main(int argc, char** argv) { return hellycone::cli::run(argc, argv); }
