#pragma once

#include "fewbody/model.hpp"

namespace fewbody::testing {

using fewbody::random_params;

}  // namespace fewbody::testing
