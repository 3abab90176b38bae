#ifndef DFCOST_VALIDATE_HPP_
#define DFCOST_VALIDATE_HPP_

#include "dfcost/types.hpp"

namespace dfcost {

// Strict mode (default) rejects mapping sizes larger than the dimension
// extent; lenient mode clamps them to a fully-unrolled mapping and warns.
enum class ValidationMode { Strict, Lenient };

// Checks the legality conditions of a dataflow against a layer:
//  - bound:      no directive maps indices beyond its dimension extent;
//  - coverage:   the tile positions visit every index (warning; suppressed
//                on strided input rows/columns);
//  - redundancy: offset < size is only meaningful on the sliding-window
//                input dimensions Y and X; anywhere else it remaps operands
//                and duplicates output contributions.
// All findings go into the report; nothing throws.
ValidationReport validate_dataflow(const LayerSpec& layer, const Dataflow& df,
                                   ValidationMode mode = ValidationMode::Strict);

}  // namespace dfcost

#endif  // DFCOST_VALIDATE_HPP_
