// Prints p(n) and the profile table for small n.
#include <iostream>

#include "cliquedec/enumerator.hpp"

int main(int argc, char** argv) {
  const int top = argc > 1 ? std::atoi(argv[1]) : 6;
  for (int n = 1; n <= top; ++n) {
    const auto r = cliquedec::count_all(n, 6);
    std::cout << "n=" << n << "  p(n)=" << cliquedec::to_decimal(r.total) << "  profiles=" << r.by_profile.size()
              << '\n';
    for (const auto& [p, count] : r.by_profile) {
      std::cout << "   ";
      for (int k = 2; k <= p.cutoff; ++k)
        if (p.s(k) != 0) std::cout << " s" << k << '=' << p.s(k);
      std::cout << "  -> " << cliquedec::to_decimal(count) << '\n';
    }
  }
}
