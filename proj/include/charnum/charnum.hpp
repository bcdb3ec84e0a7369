#pragma once

#include "charnum/bigint.hpp"
#include "charnum/cache.hpp"
#include "charnum/chern.hpp"
#include "charnum/classes.hpp"
#include "charnum/errors.hpp"
#include "charnum/kleiman_piene.hpp"
#include "charnum/recursion.hpp"
#include "charnum/reference.hpp"
#include "charnum/request.hpp"
#include "charnum/ring.hpp"
#include "charnum/verify.hpp"
