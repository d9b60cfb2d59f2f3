#pragma once

#include "qtetra/dualities.hpp"
#include "qtetra/exactla/burnside.hpp"
#include "qtetra/exactla/intertwiner.hpp"
#include "qtetra/exactla/matrix.hpp"
#include "qtetra/exactla/subspace.hpp"
#include "qtetra/io.hpp"
#include "qtetra/modanalysis.hpp"
#include "qtetra/presentations.hpp"
#include "qtetra/reconstruct.hpp"
#include "qtetra/rep.hpp"
#include "qtetra/repbuilder.hpp"
#include "qtetra/scalars.hpp"
