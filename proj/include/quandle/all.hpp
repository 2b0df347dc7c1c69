#pragma once

#include "quandle/errors.hpp"
#include "quandle/group.hpp"
#include "quandle/catalog.hpp"
#include "quandle/quandle.hpp"
#include "quandle/invariants.hpp"
#include "quandle/dihedral.hpp"
#include "quandle/iso.hpp"
#include "quandle/io.hpp"
#include "quandle/classify.hpp"
#include "quandle/reference_data.hpp"
#include "quandle/verification.hpp"
