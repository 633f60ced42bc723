#pragma once

#include "zpzp2/errors.hpp"
#include "zpzp2/ring.hpp"
#include "zpzp2/gray.hpp"
#include "zpzp2/construction.hpp"
#include "zpzp2/parallel.hpp"
#include "zpzp2/code.hpp"
#include "zpzp2/invariants.hpp"
#include "zpzp2/classification.hpp"
#include "zpzp2/io.hpp"
