#pragma once

#include "bracoid/error.hpp"
#include "bracoid/group.hpp"
#include "bracoid/action.hpp"
#include "bracoid/report.hpp"
#include "bracoid/bracoid.hpp"
#include "bracoid/two_sided.hpp"
#include "bracoid/family.hpp"
#include "bracoid/enumerate.hpp"
#include "bracoid/io.hpp"
#include "bracoid/descriptor.hpp"
