#pragma once

#include "cindex/core.hpp"
#include "cindex/schema.hpp"
#include "cindex/csv.hpp"
#include "cindex/corpus.hpp"
#include "cindex/graph.hpp"
#include "cindex/metrics.hpp"
#include "cindex/report.hpp"
#include "cindex/demo.hpp"
