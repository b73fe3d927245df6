#include <iostream>

#include "acceptance/acceptance.hpp"

int main() {
  bool all = true;
  for (const auto& r : lerchsum::acceptance::run_acceptance()) {
    std::cout << lerchsum::acceptance::format_line(r) << "\n";
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
