#include <cstdio>

int main() {
  std::puts("fermigauss: CLI not wired up yet");
  return 0;
}
