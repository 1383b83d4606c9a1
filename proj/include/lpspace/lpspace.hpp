#ifndef LPSPACE_LPSPACE_HPP
#define LPSPACE_LPSPACE_HPP

#include "lpspace/core.hpp"
#include "lpspace/tensor.hpp"
#include "lpspace/weights.hpp"
#include "lpspace/norms.hpp"
#include "lpspace/optimizer.hpp"
#include "lpspace/blocks.hpp"
#include "lpspace/stepfn.hpp"
#include "lpspace/randvar.hpp"
#include "lpspace/treeindex.hpp"
#include "lpspace/levelvec.hpp"

#endif  // LPSPACE_LPSPACE_HPP
