#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "levelbound/numeric.hpp"

int main(int argc, char** argv) {
  levelbound::PrecisionScope precision(levelbound::kDefaultPrecisionBits);
  doctest::Context context(argc, argv);
  return context.run();
}
