#pragma once

#include "susywell/numerics.hpp"
#include "susywell/well1d.hpp"
#include "susywell/susy1d.hpp"
#include "susywell/gcs1d.hpp"
#include "susywell/spectrum2d.hpp"
#include "susywell/susy2d.hpp"
#include "susywell/cs2d.hpp"
