#pragma once

#include "quivarr/arrangement.hpp"

#include <string>
#include <vector>

namespace quivarr {

struct CorpusEntry {
    std::string name;
    Arrangement arrangement;
};

// Built-in arrangements used by the self-test and the acceptance suite.
std::vector<CorpusEntry> corpus();
Arrangement corpus_arrangement(const std::string& name);

}  // namespace quivarr
