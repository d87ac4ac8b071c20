#pragma once

#include "errors.hpp"
#include "partitions.hpp"
#include "linalg.hpp"
#include "liealg.hpp"
#include "exterior.hpp"
#include "cohomology.hpp"
#include "hwv.hpp"
#include "rigidity.hpp"
#include "diagram.hpp"
#include "report.hpp"
