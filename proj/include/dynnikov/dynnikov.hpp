#ifndef DYNNIKOV_DYNNIKOV_HPP
#define DYNNIKOV_DYNNIKOV_HPP

#include "dynnikov/braid.hpp"
#include "dynnikov/coords.hpp"
#include "dynnikov/errors.hpp"
#include "dynnikov/intersect.hpp"
#include "dynnikov/relax.hpp"
#include "dynnikov/scalar.hpp"

#endif  // DYNNIKOV_DYNNIKOV_HPP
