#include "ballmaps/ballmaps.hpp"
int main() { return 0; }
