#pragma once

#include "loopfact/combinat.hpp"
#include "loopfact/errors.hpp"
#include "loopfact/factor.hpp"
#include "loopfact/laurent.hpp"
#include "loopfact/random.hpp"
#include "loopfact/rootsub.hpp"
#include "loopfact/toeplitz.hpp"
