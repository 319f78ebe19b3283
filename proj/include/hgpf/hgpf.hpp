#pragma once

#include "hgpf/catalog.hpp"
#include "hgpf/contiguous.hpp"
#include "hgpf/exactmath.hpp"
#include "hgpf/gpf.hpp"
#include "hgpf/lattice.hpp"
#include "hgpf/model.hpp"
#include "hgpf/numerics/certify.hpp"
#include "hgpf/pipeline.hpp"
#include "hgpf/symmetry.hpp"
#include "hgpf/ypoly.hpp"
