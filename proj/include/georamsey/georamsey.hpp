#pragma once

#include "georamsey/certificate.hpp"
#include "georamsey/coloring.hpp"
#include "georamsey/combinatorics.hpp"
#include "georamsey/constructions.hpp"
#include "georamsey/errors.hpp"
#include "georamsey/extraction.hpp"
#include "georamsey/geometry.hpp"
#include "georamsey/orientation_table.hpp"
#include "georamsey/point.hpp"
#include "georamsey/random.hpp"
#include "georamsey/ramsey.hpp"
#include "georamsey/stepping_up.hpp"
#include "georamsey/svg.hpp"
#include "georamsey/text_format.hpp"
#include "georamsey/verify.hpp"
