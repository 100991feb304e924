/// \file
/// Everything in one include.

#pragma once

#include "hooklie/combinat.hpp"
#include "hooklie/series.hpp"
#include "hooklie/characters.hpp"
#include "hooklie/lie.hpp"
#include "hooklie/cdes.hpp"
#include "hooklie/cache.hpp"
#include "hooklie/report.hpp"
#include "hooklie/verify.hpp"
