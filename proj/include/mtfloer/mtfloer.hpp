#pragma once

#include "closed_form.hpp"
#include "errors.hpp"
#include "exterior_algebra.hpp"
#include "graded_group.hpp"
#include "integer_homology.hpp"
#include "knot_model.hpp"
#include "verify.hpp"
