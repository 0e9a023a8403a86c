#pragma once

#include "spinpair/entanglement.hpp"
#include "spinpair/error.hpp"
#include "spinpair/hamiltonians.hpp"
#include "spinpair/manybody.hpp"
#include "spinpair/matkernel.hpp"
#include "spinpair/separability.hpp"
#include "spinpair/states.hpp"
#include "spinpair/symmetry.hpp"
