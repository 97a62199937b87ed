#ifndef SATAKE_SATAKE_HPP
#define SATAKE_SATAKE_HPP

#include "satake/bitset.hpp"
#include "satake/boundary.hpp"
#include "satake/cartan.hpp"
#include "satake/corpus.hpp"
#include "satake/diagram.hpp"
#include "satake/dot.hpp"
#include "satake/dsl.hpp"
#include "satake/families.hpp"
#include "satake/generate.hpp"
#include "satake/graph.hpp"
#include "satake/index.hpp"
#include "satake/operators.hpp"
#include "satake/permutation.hpp"
#include "satake/rationality.hpp"
#include "satake/render.hpp"
#include "satake/report_json.hpp"

#endif  // SATAKE_SATAKE_HPP
