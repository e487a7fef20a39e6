#pragma once

// Umbrella header.

#include "ballmaps/ball.hpp"
#include "ballmaps/bipartite.hpp"
#include "ballmaps/choi.hpp"
#include "ballmaps/hermitian.hpp"
#include "ballmaps/io.hpp"
#include "ballmaps/maps.hpp"
#include "ballmaps/random.hpp"
#include "ballmaps/verify.hpp"
#include "ballmaps/witness.hpp"
