#pragma once

#include <string>
#include <vector>

#include "racg/simplicial.hpp"

namespace racg {

// Built-in example complexes resolvable through the corpus: URI scheme.
struct CorpusEntry {
  std::string name;
  FlagComplex complex;
  FVector expected_f;       // annotation, checked by `corpus check`
  std::string description;
};

// Names of the fixed (non-parametric) corpus entries.
std::vector<std::string> corpus_names();

// Resolves fixed names and the parametric families mgon-M, points-K,
// kmn-M-N, simplex-K, susp-mgon-M, join-mgon-M-N.
CorpusEntry corpus_entry(const std::string& name);

// "corpus:NAME" or a path to a JSON complex file.
FlagComplex resolve_flag_complex(const std::string& uri, bool assume_flag = false);

}  // namespace racg
