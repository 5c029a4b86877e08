#pragma once

#include "orbitkit/conventions.hpp"
#include "orbitkit/algebra.hpp"
#include "orbitkit/groups.hpp"
#include "orbitkit/coadjoint.hpp"
#include "orbitkit/orbit.hpp"
#include "orbitkit/dynamics.hpp"
