#pragma once

#include "clasp/error.hpp"
#include "clasp/braid.hpp"
#include "clasp/laurent.hpp"
#include "clasp/diagram.hpp"
#include "clasp/sparse_matrix.hpp"
#include "clasp/parallel.hpp"
#include "clasp/khovanov.hpp"
#include "clasp/annular.hpp"
#include "clasp/alexander.hpp"
#include "clasp/verify.hpp"
