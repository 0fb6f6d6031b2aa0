#ifndef MATWB_CONSTRUCTIONS_HPP
#define MATWB_CONSTRUCTIONS_HPP

#include "matwb/matrix.hpp"

namespace matwb {

// The 6x6 near-regular matrix with rows a,b,c,1,2,3 and columns d,e,f,4,5,6
// whose matroid is the 12-element obstruction engine.
LabeledMatrix buildA12();

}  // namespace matwb

#endif
