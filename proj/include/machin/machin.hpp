#pragma once

#include "machin/document.hpp"
#include "machin/errors.hpp"
#include "machin/evaluator.hpp"
#include "machin/exactint.hpp"
#include "machin/generator.hpp"
#include "machin/listing.hpp"
#include "machin/measure.hpp"
#include "machin/verify.hpp"
