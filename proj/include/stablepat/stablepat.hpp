#pragma once

#include "stablepat/bigint.hpp"
#include "stablepat/errors.hpp"
#include "stablepat/family.hpp"
#include "stablepat/ground.hpp"
#include "stablepat/json_io.hpp"
#include "stablepat/parallel.hpp"
#include "stablepat/pattern.hpp"
#include "stablepat/ramsey.hpp"
#include "stablepat/stability.hpp"
#include "stablepat/standard.hpp"
#include "stablepat/suites.hpp"
