// Umbrella header.
#pragma once

#include "cat.hpp"
#include "eig.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "locc.hpp"
#include "matrix.hpp"
#include "state.hpp"
#include "witness.hpp"
