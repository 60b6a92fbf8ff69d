#pragma once

#include "series.hpp"
#include "matrix.hpp"
#include "poset.hpp"
#include "genfun.hpp"
#include "oracle.hpp"
#include "verify.hpp"
#include "asymptotics.hpp"
