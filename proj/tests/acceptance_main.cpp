#include <iostream>

#include "fsl/acceptance.hpp"

int main() {
  auto results = fsl::acceptance::run_all(std::cout);
  std::cout << "\n";
  int failed = 0;
  for (const auto& r : results) {
    std::cout << "criterion " << r.number << ": "
              << (r.pass ? "PASS" : "FAIL") << " (" << r.seconds << " s) "
              << r.name << "\n";
    if (!r.pass) {
      ++failed;
      std::cout << "  " << r.detail << "\n";
    }
  }
  return failed == 0 ? 0 : 1;
}
