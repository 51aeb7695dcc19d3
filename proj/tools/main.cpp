#include "exppairs/applications.hpp"

int main(int argc, char** argv) { return exppairs::run_cli(argc, argv); }
