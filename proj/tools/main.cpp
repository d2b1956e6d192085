#include "cli.hpp"

int main(int argc, char** argv) { return thuelab::cli_main(argc, argv); }
