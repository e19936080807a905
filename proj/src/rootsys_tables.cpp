#include "porc/rootsys.hpp"

namespace porc {

namespace {

const char* kA2 =
    "1 0\n"
    "0 1\n"
    "1 1\n";
const char* kA3 =
    "1 0 0\n"
    "0 1 0\n"
    "0 0 1\n"
    "1 1 0\n"
    "0 1 1\n"
    "1 1 1\n";
const char* kA4 =
    "1 0 0 0\n"
    "0 1 0 0\n"
    "0 0 1 0\n"
    "0 0 0 1\n"
    "1 1 0 0\n"
    "0 1 1 0\n"
    "0 0 1 1\n"
    "1 1 1 0\n"
    "0 1 1 1\n"
    "1 1 1 1\n";
const char* kB2 =
    "1 0\n"
    "0 1\n"
    "1 1\n"
    "1 2\n";
const char* kB3 =
    "1 0 0\n"
    "0 1 0\n"
    "0 0 1\n"
    "1 1 0\n"
    "0 1 1\n"
    "1 1 1\n"
    "0 1 2\n"
    "1 1 2\n"
    "1 2 2\n";
const char* kB4 =
    "1 0 0 0\n"
    "0 1 0 0\n"
    "0 0 1 0\n"
    "0 0 0 1\n"
    "1 1 0 0\n"
    "0 1 1 0\n"
    "0 0 1 1\n"
    "1 1 1 0\n"
    "0 1 1 1\n"
    "0 0 1 2\n"
    "1 1 1 1\n"
    "0 1 1 2\n"
    "1 1 1 2\n"
    "0 1 2 2\n"
    "1 1 2 2\n"
    "1 2 2 2\n";
const char* kC3 =
    "1 0 0\n"
    "0 1 0\n"
    "0 0 1\n"
    "1 1 0\n"
    "0 1 1\n"
    "1 1 1\n"
    "0 2 1\n"
    "1 2 1\n"
    "2 2 1\n";
const char* kC4 =
    "1 0 0 0\n"
    "0 1 0 0\n"
    "0 0 1 0\n"
    "0 0 0 1\n"
    "1 1 0 0\n"
    "0 1 1 0\n"
    "0 0 1 1\n"
    "1 1 1 0\n"
    "0 1 1 1\n"
    "0 0 2 1\n"
    "1 1 1 1\n"
    "0 1 2 1\n"
    "1 1 2 1\n"
    "0 2 2 1\n"
    "1 2 2 1\n"
    "2 2 2 1\n";
const char* kD4 =
    "1 0 0 0\n"
    "0 1 0 0\n"
    "0 0 1 0\n"
    "0 0 0 1\n"
    "1 1 0 0\n"
    "0 1 1 0\n"
    "0 1 0 1\n"
    "1 1 1 0\n"
    "1 1 0 1\n"
    "0 1 1 1\n"
    "1 1 1 1\n"
    "1 2 1 1\n";
const char* kF4 =
    "1 0 0 0\n"
    "0 1 0 0\n"
    "0 0 1 0\n"
    "0 0 0 1\n"
    "1 1 0 0\n"
    "0 1 1 0\n"
    "0 0 1 1\n"
    "1 1 1 0\n"
    "0 1 2 0\n"
    "0 1 1 1\n"
    "1 1 2 0\n"
    "1 1 1 1\n"
    "0 1 2 1\n"
    "1 2 2 0\n"
    "1 1 2 1\n"
    "0 1 2 2\n"
    "1 2 2 1\n"
    "1 1 2 2\n"
    "1 2 3 1\n"
    "1 2 2 2\n"
    "1 2 3 2\n"
    "1 2 4 2\n"
    "1 3 4 2\n"
    "2 3 4 2\n";
const char* kG2 =
    "1 0\n"
    "0 1\n"
    "1 1\n"
    "1 2\n"
    "1 3\n"
    "2 3\n";
}  // namespace

// Pinned enumerations, identical to the files under data/roots/.
const char* embedded_root_table(char type, int rank) {
  switch (type) {
    case 'A':
      if (rank == 2) return kA2;
      if (rank == 3) return kA3;
      if (rank == 4) return kA4;
      break;
    case 'B':
      if (rank == 2) return kB2;
      if (rank == 3) return kB3;
      if (rank == 4) return kB4;
      break;
    case 'C':
      if (rank == 3) return kC3;
      if (rank == 4) return kC4;
      break;
    case 'D':
      if (rank == 4) return kD4;
      break;
    case 'F':
      if (rank == 4) return kF4;
      break;
    case 'G':
      if (rank == 2) return kG2;
      break;
    default: break;
  }
  return nullptr;
}

}  // namespace porc
