#include <cstdio>

int main() {
  std::puts("slog: placeholder");
  return 0;
}
