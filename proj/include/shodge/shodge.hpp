#pragma once

#include "shodge/error.hpp"
#include "shodge/polyring.hpp"
#include "shodge/rootsys.hpp"
#include "shodge/flagcoh.hpp"
#include "shodge/sasaki.hpp"
#include "shodge/diamond_json.hpp"
