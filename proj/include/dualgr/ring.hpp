#pragma once

#include "dualgr/ring/laurent.hpp"
#include "dualgr/ring/multipoly.hpp"
#include "dualgr/ring/scalar.hpp"
#include "dualgr/ring/unipoly.hpp"
