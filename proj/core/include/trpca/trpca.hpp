#pragma once

#include "trpca/error.hpp"
#include "trpca/fourier.hpp"
#include "trpca/io.hpp"
#include "trpca/norms.hpp"
#include "trpca/prox.hpp"
#include "trpca/rng.hpp"
#include "trpca/solver.hpp"
#include "trpca/synth.hpp"
#include "trpca/talgebra.hpp"
#include "trpca/tensor.hpp"
#include "trpca/tsvd.hpp"
