#pragma once

// Umbrella header.

#include "monohaz/asymptotics.hpp"
#include "monohaz/censored_sample.hpp"
#include "monohaz/estimators.hpp"
#include "monohaz/inference.hpp"
#include "monohaz/isotonic.hpp"
#include "monohaz/kernel.hpp"
#include "monohaz/numeric.hpp"
#include "monohaz/rng.hpp"
#include "monohaz/scenario.hpp"
#include "monohaz/simulation.hpp"
#include "monohaz/smoothing.hpp"
#include "monohaz/step_function.hpp"
