#include "setfn/io.hpp"
int main() { return 0; }
