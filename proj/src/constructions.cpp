#include "matwb/constructions.hpp"

namespace matwb {

LabeledMatrix buildA12() {
  return LabeledMatrix::fromStrings(
      PartialField::nearRegular(), {"a", "b", "c", "1", "2", "3"}, {"d", "e", "f", "4", "5", "6"},
      {
          {"1", "0", "1", "1", "1", "0"},
          {"0", "-1", "1", "1", "0", "a"},
          {"1", "1", "0", "0", "a", "-a"},
          {"0", "0", "0", "1", "0", "1"},
          {"0", "0", "0", "0", "1", "-1"},
          {"0", "0", "0", "1", "1", "0"},
      });
}

}  // namespace matwb
