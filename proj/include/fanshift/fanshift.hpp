#ifndef FANSHIFT_FANSHIFT_HPP
#define FANSHIFT_FANSHIFT_HPP

#include "fanshift/errors.hpp"
#include "fanshift/xspace.hpp"
#include "fanshift/relations.hpp"
#include "fanshift/itinerary.hpp"
#include "fanshift/mahavier.hpp"
#include "fanshift/impression.hpp"
#include "fanshift/quotients.hpp"
#include "fanshift/invariants.hpp"
#include "fanshift/render.hpp"
#include "fanshift/report.hpp"
#include "fanshift/experiments.hpp"

#endif
