#include <iostream>
int main() { std::cout << "stickkit placeholder\n"; }
