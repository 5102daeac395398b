#pragma once

#include "minknot/braid.hpp"
#include "minknot/catalog.hpp"
#include "minknot/invariants.hpp"
#include "minknot/jones.hpp"
#include "minknot/laurent.hpp"
#include "minknot/oracle.hpp"
#include "minknot/params.hpp"
#include "minknot/rational.hpp"
#include "minknot/serialize.hpp"
#include "minknot/svg.hpp"
