#include <cstdio>

int main() {
    std::puts("dhlab: CLI wiring pending");
    return 2;
}
