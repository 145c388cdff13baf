#pragma once

#include "code_io.hpp"
#include "cyc_linalg.hpp"
#include "cyclotomic.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "isometry.hpp"
#include "matrix.hpp"
#include "pauli.hpp"
#include "quantum.hpp"
#include "rational.hpp"
#include "ring.hpp"
#include "ring_linalg.hpp"
#include "stabilizer_code.hpp"
