// Compares the OpenMP identity checker against the serial reference on a
// large product algebra. Usage: bench_identity [power]
#include <chrono>
#include <cstdlib>
#include <iostream>

#include "skew/fixtures.hpp"
#include "skew/identities.hpp"

using namespace skew;
using Clock = std::chrono::steady_clock;

int main(int argc, char** argv) {
  int power = argc > 1 ? std::atoi(argv[1]) : 3;
  // f4r^power: still a skew lattice, large enough for 4-variable scans
  Algebra big = fixtures::f4r();
  for (int i = 1; i < power; ++i) big = direct_product(big, fixtures::f4r());
  std::cout << "algebra size " << big.size() << "\n";

  for (const char* code : {"S19", "S25", "REG_MEET"}) {
    const Identity& id = catalog(code);
    auto t0 = Clock::now();
    IdentityVerdict serial = check_identity_serial(big, id);
    double ts = std::chrono::duration<double>(Clock::now() - t0).count();
    t0 = Clock::now();
    IdentityVerdict parallel = check_identity(big, id);
    double tp = std::chrono::duration<double>(Clock::now() - t0).count();
    if (serial.holds != parallel.holds ||
        serial.assignment != parallel.assignment) {
      std::cerr << code << ": verdicts disagree\n";
      return 1;
    }
    std::cout << code << ": serial " << ts << "s, parallel " << tp
              << "s, speedup " << (tp > 0 ? ts / tp : 0)
              << ", holds=" << serial.holds << "\n";
  }
  return 0;
}
