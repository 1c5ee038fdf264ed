#pragma once

#include "multspace/charformula.hpp"
#include "multspace/laurent.hpp"
#include "multspace/lieweights.hpp"
#include "multspace/linalg.hpp"
#include "multspace/numeric.hpp"
#include "multspace/oracle.hpp"
#include "multspace/partitions.hpp"
#include "multspace/symgroup.hpp"
