#pragma once

#include "antisym/bounds.hpp"
#include "antisym/matrix.hpp"
#include "antisym/rational.hpp"
#include "antisym/simplex.hpp"
#include "antisym/verify.hpp"
#include "antisym/werner.hpp"
#include "antisym/young.hpp"
#include "antisym/zeta.hpp"
