#pragma once

#include "crsk.hpp"
#include "enumeration.hpp"
#include "json_io.hpp"
#include "knuth.hpp"
#include "marble.hpp"
