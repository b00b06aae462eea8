#pragma once

// Bundled link corpus. Files under <data>/corpus hold one link each, either a
// PD code (content starting with "PD") or a braid word; files under
// <data>/singular hold PD codes with singular crossings.

#include <string>
#include <vector>

#include "knotapprox/diagram.hpp"
#include "knotapprox/verify.hpp"

namespace knotapprox {

struct CorpusLink {
  std::string name;
  LinkDiagram diagram;
};

// $KNOTAPPROX_DATA when set, otherwise the directory shipped with the build.
std::string data_dir();

std::string read_text_file(const std::string& path);

// Parses PD or braid text, chosen by content.
LinkDiagram parse_link(const std::string& text);

// An existing file path, or the name of a corpus entry with or without its
// extension.
std::string resolve_link_path(const std::string& ref);
LinkDiagram load_link(const std::string& ref);

// Sorted by name.
std::vector<CorpusLink> load_corpus(const std::string& dir);
std::vector<CorpusLink> load_corpus();
std::vector<SingularSample> load_singular_samples(const std::string& dir);
std::vector<SingularSample> load_singular_samples();

}  // namespace knotapprox
