#include <iostream>

#include "psiab/verify.hpp"

int main() {
  int failed = 0;
  for (int id = 1; id <= psiab::verify::kAcceptanceCount; ++id) {
    const auto check = psiab::verify::acceptance_check(id);
    std::cout << psiab::verify::format(check) << std::endl;
    if (!check.pass) ++failed;
  }
  std::cout << (psiab::verify::kAcceptanceCount - failed) << "/"
            << psiab::verify::kAcceptanceCount << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
