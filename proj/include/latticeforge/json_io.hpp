#pragma once

#include <string>

#include <json.hpp>

#include "latticeforge/discform.hpp"
#include "latticeforge/lattice.hpp"
#include "latticeforge/nikulin.hpp"

namespace lf {

using Json = nlohmann::ordered_json;

/// "p/q" in lowest terms; plain "p" for integers.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

/// Gram entries are emitted as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise; both are accepted on input.
Json lattice_to_json(const IntegerLattice& lattice);
IntegerLattice lattice_from_json(const Json& j);

Json form_to_json(const FiniteQuadraticForm& q);

Json report_to_json(const ClassificationReport& report, bool explain = false);

}  // namespace lf
