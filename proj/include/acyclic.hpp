#pragma once

// Core library. JSON and DOT serialization live in acyclic/formats.hpp.

#include "acyclic/bichromatic.hpp"
#include "acyclic/colorer.hpp"
#include "acyclic/coloring.hpp"
#include "acyclic/discharging.hpp"
#include "acyclic/edge_list.hpp"
#include "acyclic/embedding.hpp"
#include "acyclic/errors.hpp"
#include "acyclic/generators.hpp"
#include "acyclic/graph.hpp"
#include "acyclic/oracle.hpp"
#include "acyclic/rational.hpp"
#include "acyclic/scanner.hpp"
