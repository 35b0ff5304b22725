#pragma once

#include "foldkit/algebra.hpp"
#include "foldkit/error.hpp"
#include "foldkit/field.hpp"
#include "foldkit/groebner.hpp"
#include "foldkit/ideal.hpp"
#include "foldkit/io.hpp"
#include "foldkit/linalg.hpp"
#include "foldkit/path.hpp"
#include "foldkit/presentation.hpp"
#include "foldkit/quiver.hpp"
#include "foldkit/skew.hpp"
#include "foldkit/verify.hpp"
#include "foldkit/weyl.hpp"
