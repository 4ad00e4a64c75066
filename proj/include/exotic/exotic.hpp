#pragma once

#include "exotic/error.hpp"
#include "exotic/scalars.hpp"
#include "exotic/linalg.hpp"
#include "exotic/parallel.hpp"
#include "exotic/weyl.hpp"
#include "exotic/hecke.hpp"
#include "exotic/exotic_rep.hpp"
#include "exotic/params.hpp"
#include "exotic/orbits.hpp"
#include "exotic/json_io.hpp"
