#include "blog/cli.hpp"

int main(int argc, char** argv) { return blog::cli_dispatch(argc, argv); }
