#pragma once

#include <vector>

#include "endosign/cli/input_spec.hpp"
#include "endosign/cli/json_io.hpp"

namespace endosign::cli {

enum class Section { Signs, Orbits, Endoscopy, Packet, Lattices };

const char* section_name(Section s);
std::vector<Section> all_sections();

/// Runs the requested sections on a parsed spec. Sections that need data the
/// spec lacks (endoscopy without q, lattices without jobs) are skipped.
/// The returned report is finalized.
Report analyze(const InputSpec& spec, const std::vector<Section>& sections = all_sections());

}  // namespace endosign::cli
