#include <cstdio>

int main() {
  std::puts("hoops: subcommands not wired yet");
  return 2;
}
