#pragma once

#include "hgpf/exactmath/rational.hpp"
#include "hgpf/exactmath/poly.hpp"
#include "hgpf/exactmath/sturm.hpp"
#include "hgpf/exactmath/factor.hpp"
#include "hgpf/exactmath/algreal.hpp"
#include "hgpf/exactmath/numfield.hpp"
