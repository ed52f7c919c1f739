#pragma once

#include <string>
#include <string_view>

#include "liftspace/complex.hpp"
#include "liftspace/covers.hpp"
#include "liftspace/report.hpp"

namespace liftspace::cli {

/// Graphviz digraph: nodes v{base}_{coset} in ascending order, one edge per
/// undirected lifted edge (drawn along its positive dart), chord lifts
/// labelled by generator, tree lifts dashed.
std::string export_dot(const CoverGraph& cover, const Pi1Basis& basis);

std::string render_human(const Report& report);

/// Line records: a schema header, one tab-separated `check` record per
/// entry, then a `summary` record. Tabs, newlines and backslashes in text
/// are escaped.
std::string render_machine(const Report& report);

/// Inverse of render_machine; throws SyntaxError on a malformed record.
Report parse_machine(std::string_view text);

}  // namespace liftspace::cli
