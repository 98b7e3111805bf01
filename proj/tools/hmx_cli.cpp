#include "hmx/cli.hpp"

int main(int argc, char** argv) { return hmx::cli_dispatch(argc, argv); }
