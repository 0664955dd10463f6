#include "rankcrit/cli.hpp"

int main(int argc, char** argv) { return rankcrit::cli_dispatch(argc, argv); }
