#include "cshuf/veritool.hpp"

int main(int argc, char** argv) { return cshuf::cli_main(argc, argv); }
