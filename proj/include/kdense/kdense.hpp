#pragma once

#include "kdense/clique_count.hpp"
#include "kdense/combinatorics.hpp"
#include "kdense/error.hpp"
#include "kdense/extract.hpp"
#include "kdense/fw.hpp"
#include "kdense/generators.hpp"
#include "kdense/graph.hpp"
#include "kdense/oracle.hpp"
#include "kdense/sampler.hpp"
#include "kdense/sct.hpp"
#include "kdense/sct_io.hpp"
