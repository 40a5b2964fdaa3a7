#pragma once

#include "markoff/count1bc.hpp"
#include "markoff/emit.hpp"
#include "markoff/enumerate.hpp"
#include "markoff/forms.hpp"
#include "markoff/integers.hpp"
#include "markoff/kernel.hpp"
#include "markoff/survey.hpp"
#include "markoff/tree.hpp"
#include "markoff/triple.hpp"
