#pragma once

#include "dualgr/certificates.hpp"
#include "dualgr/checks.hpp"
#include "dualgr/degree.hpp"
#include "dualgr/exterior_form.hpp"
#include "dualgr/hessian.hpp"
#include "dualgr/irreducibility.hpp"
#include "dualgr/json_io.hpp"
#include "dualgr/matrix.hpp"
#include "dualgr/multiindex.hpp"
#include "dualgr/node_cusp.hpp"
#include "dualgr/random.hpp"
#include "dualgr/ring.hpp"
