#pragma once

#include <vector>

namespace fanohs {

struct EmbeddedFile {
  const char* name;
  const char* text;
};

// JSON payloads from data/*.json, baked in at build time.
const std::vector<EmbeddedFile>& embedded_data_files();

}  // namespace fanohs
