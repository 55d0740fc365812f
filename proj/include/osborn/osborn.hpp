#pragma once

#include "osborn/error.hpp"
#include "osborn/permutation.hpp"
#include "osborn/table.hpp"
#include "osborn/loop.hpp"
#include "osborn/identities.hpp"
#include "osborn/check.hpp"
#include "osborn/properties.hpp"
#include "osborn/perm_group.hpp"
#include "osborn/mappings.hpp"
#include "osborn/groups.hpp"
#include "osborn/search.hpp"
#include "osborn/cycles.hpp"
#include "osborn/crypto.hpp"
#include "osborn/verifier.hpp"
#include "osborn/report.hpp"
#include "osborn/catalog_io.hpp"
