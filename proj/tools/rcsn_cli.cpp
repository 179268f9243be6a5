#include <iostream>

int main() {
    std::cout << "rcsn cli placeholder\n";
    return 0;
}
