#include <doctest.h>

#include <stdexcept>

#include <cstdint>
#include <vector>

#include "franel/totient.hpp"

using franel::TotientTable;

TEST_CASE("phi values up to 10") {
  TotientTable table(10);
  const std::uint64_t expected[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4};
  for (std::uint64_t k = 1; k <= 10; ++k) CHECK(table.phi(k) == expected[k - 1]);
}

TEST_CASE("prefix sums") {
  TotientTable table(300);
  CHECK(table.interior_count(5) == 9);  // phi(2..5) = 1+2+2+4
  CHECK(table.interior_count(2) == 1);
  CHECK(table.interior_count(3) == 3);

  std::uint64_t running = 0;
  std::uint64_t prev = 0;
  for (std::uint64_t m = 2; m <= 300; ++m) {
    running += table.phi(m);
    CHECK(table.interior_count(m) == running);
    CHECK(table.interior_count(m) > prev);  // strictly increasing
    prev = running;
  }
}

TEST_CASE("divisor sum identity: sum of phi(d) over d | k equals k") {
  TotientTable table(200);
  for (std::uint64_t k = 1; k <= 200; ++k) {
    std::uint64_t sum = 0;
    for (std::uint64_t d = 1; d <= k; ++d) {
      if (k % d == 0) sum += table.phi(d);
    }
    CHECK(sum == k);
  }
}

TEST_CASE("primality via phi(p) = p-1 agrees with trial division") {
  TotientTable table(1000);
  for (std::uint64_t k = 1; k <= 1000; ++k) {
    bool prime = k >= 2;
    for (std::uint64_t d = 2; d * d <= k; ++d) {
      if (k % d == 0) {
        prime = false;
        break;
      }
    }
    CHECK(table.is_prime(k) == prime);
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(TotientTable(0), std::invalid_argument);

  TotientTable table(10);
  CHECK_THROWS_AS(table.phi(0), std::invalid_argument);
  CHECK_THROWS_AS(table.phi(11), std::invalid_argument);
  CHECK_THROWS_AS(table.interior_count(1), std::invalid_argument);
  CHECK_THROWS_AS(table.interior_count(11), std::invalid_argument);
}
