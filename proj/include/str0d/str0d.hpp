#pragma once

// Everything in the library. JSON support (json_io.hpp, verify.hpp) needs
// nlohmann/json on the include path and is pulled in separately.

#include "str0d/error.hpp"
#include "str0d/limits.hpp"
#include "str0d/frame.hpp"
#include "str0d/morphism.hpp"
#include "str0d/enumerate.hpp"
#include "str0d/congruence.hpp"
#include "str0d/congruence_frame.hpp"
#include "str0d/biframe.hpp"
#include "str0d/frame_limits.hpp"
#include "str0d/category.hpp"
#include "str0d/clear.hpp"
#include "str0d/skula.hpp"
#include "str0d/oracle.hpp"
