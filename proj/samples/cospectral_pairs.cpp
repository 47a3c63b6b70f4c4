// Lists cospectral complete tripartite pairs of small order and checks each against the
// Seidel characteristic polynomial and the switching test.
#include <seidel/seidel.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace seidel;
  const std::int64_t last = argc > 1 ? std::stoll(argv[1]) : 20;
  for (std::int64_t n = 13; n <= last; ++n) {
    for (const auto& fam : scan_order(n).families) {
      const auto& a = fam.members[0];
      for (std::size_t i = 1; i < fam.members.size(); ++i) {
        const auto& b = fam.members[i];
        const bool same_poly = multipartite_char_poly(a.spec()) == multipartite_char_poly(b.spec());
        std::cout << "n=" << n << "  " << a.to_string() << " ~ " << b.to_string()
                  << "  poly " << (same_poly ? "equal" : "DIFFERENT");
        if (n <= 14) {
          const bool sw = switching_equivalent(complete_multipartite(a.spec()), complete_multipartite(b.spec())).has_value();
          std::cout << "  switching " << (sw ? "equivalent" : "inequivalent");
        }
        std::cout << '\n';
      }
    }
  }
}
