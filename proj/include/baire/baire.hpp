#pragma once

#include "baire/alphabet.hpp"
#include "baire/automaton.hpp"
#include "baire/game.hpp"
#include "baire/openset.hpp"
#include "baire/presentation.hpp"
#include "baire/rational.hpp"
#include "baire/remark2.hpp"
#include "baire/schedule.hpp"
#include "baire/serialize.hpp"
#include "baire/tailsum.hpp"
#include "baire/witness.hpp"
#include "baire/word.hpp"
