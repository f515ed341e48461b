#pragma once

#include "chordflow/error.hpp"
#include "chordflow/diagram.hpp"
#include "chordflow/codes.hpp"
#include "chordflow/surface.hpp"
#include "chordflow/enumeration.hpp"
#include "chordflow/reversal.hpp"
#include "chordflow/catalog_io.hpp"
#include "chordflow/render.hpp"
