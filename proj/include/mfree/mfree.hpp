#pragma once

#include "mfree/error.hpp"
#include "mfree/field.hpp"
#include "mfree/matrix.hpp"
#include "mfree/group.hpp"
#include "mfree/rep.hpp"
#include "mfree/module.hpp"
#include "mfree/algebra.hpp"
#include "mfree/meataxe.hpp"
#include "mfree/homalg.hpp"
#include "mfree/structure.hpp"
#include "mfree/ext.hpp"
#include "mfree/parse.hpp"
#include "mfree/cache.hpp"
#include "mfree/zoo.hpp"
#include "mfree/verdicts.hpp"
