#pragma once

#include "errors.hpp"
#include "gaussian.hpp"
#include "matrix.hpp"
#include "linalg.hpp"
#include "lie.hpp"
#include "frame.hpp"
#include "forms.hpp"
#include "complex_structure.hpp"
#include "dolbeault.hpp"
#include "polynomial.hpp"
#include "kuranishi.hpp"
#include "catalog.hpp"
#include "alg_file.hpp"
