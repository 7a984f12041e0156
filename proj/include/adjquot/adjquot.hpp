#pragma once

#include "adjquot/core.hpp"
#include "adjquot/sections.hpp"
#include "adjquot/baselocus.hpp"
#include "adjquot/jets.hpp"
#include "adjquot/lemmas.hpp"
#include "adjquot/search.hpp"
