#pragma once

#include "repstab/characters.hpp"
#include "repstab/charpoly.hpp"
#include "repstab/errors.hpp"
#include "repstab/genfun.hpp"
#include "repstab/laurent_series.hpp"
#include "repstab/partition.hpp"
#include "repstab/polynomial.hpp"
#include "repstab/rational.hpp"
#include "repstab/stable.hpp"
#include "repstab/verify.hpp"
