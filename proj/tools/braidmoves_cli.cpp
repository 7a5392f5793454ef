#include <iostream>

int main() {
    std::cout << "braidmoves cli placeholder\n";
    return 0;
}
