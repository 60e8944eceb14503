#pragma once

#include <json.hpp>
#include <string>

#include "innerlab/extremal.hpp"
#include "innerlab/inner_function.hpp"
#include "innerlab/jordan.hpp"
#include "innerlab/measures.hpp"
#include "innerlab/thickness.hpp"

namespace innerlab {

using Json = nlohmann::json;

// Canonical dump: objects with sorted keys (nlohmann's map order), numbers
// printed with 17 significant digits, no whitespace.  Re-parsing and dumping
// reproduces the bytes.
std::string canonical_json(const Json& value);

Json to_json(const Moebius& m);
Moebius moebius_from_json(const Json& j);

Json to_json(const BlaschkeProduct& b);
BlaschkeProduct blaschke_from_json(const Json& j);

Json to_json(const InnerFunctionRep& f);
InnerFunctionRep inner_rep_from_json(const Json& j);

Json to_json(const CircleMeasure& mu);
CircleMeasure circle_measure_from_json(const Json& j);

Json to_json(const DiskMeasure& mu);
DiskMeasure disk_measure_from_json(const Json& j);

Json to_json(const BeurlingCarlesonSet& e);
BeurlingCarlesonSet bc_set_from_json(const Json& j);

Json to_json(const PolylineJordanDomain& omega);
PolylineJordanDomain domain_from_json(const Json& j);

Json to_json(const BoundaryPartition& parts);
BoundaryPartition partition_from_json(const Json& j);

// CSV with rows "x,h1,h2"; header row optional on read.
std::string strip_domain_to_csv(const StripGraphDomain& u);
StripGraphDomain strip_domain_from_csv(const std::string& text);

// ASCII PGM (P2), 0 outside / 255 inside; side markings travel as JSON
// {"delta":d,"side_a":[[i,j],...],"side_b":[[i,j],...]}.
std::string mask_to_pgm(const GridDomain& g);
GridDomain grid_from_pgm_and_marking(const std::string& pgm, const Json& marking);
Json marking_to_json(const GridDomain& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace innerlab
