#pragma once

#include "phasealg/scalar.hpp"
#include "phasealg/algebra.hpp"
#include "phasealg/representation.hpp"
#include "phasealg/classify.hpp"
#include "phasealg/casimir.hpp"
#include "phasealg/spinor.hpp"
#include "phasealg/phenomenology.hpp"
