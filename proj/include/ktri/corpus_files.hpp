#ifndef KTRI_CORPUS_FILES_HPP
#define KTRI_CORPUS_FILES_HPP

#include "ktri/serialize.hpp"

namespace ktri {

struct NamedFixture {
  std::string name;
  std::string description;
  Json payload;
};

// The shipped regression corpus, fully regenerable: the running example at
// two sizes, the scaled conforming family, the constant additive family,
// the sliding-hump adversary, and the deliberately tight scaling fixture.
// Every expected value carries its provenance tag in the fixture metadata.
std::vector<NamedFixture> standard_corpus();

Json corpus_manifest(const std::vector<NamedFixture>& fixtures);

// Writes <name>.json per fixture plus manifest.json into dir.
void write_corpus(const std::string& dir);

}  // namespace ktri

#endif  // KTRI_CORPUS_FILES_HPP
