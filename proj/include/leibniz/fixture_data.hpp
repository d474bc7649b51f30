#pragma once

#include <string_view>
#include <vector>

namespace leibniz {

struct EmbeddedFile {
  std::string_view name;
  std::string_view content;
};

/// Contents of fixtures/*.json at build time, sorted by file name.
const std::vector<EmbeddedFile>& embedded_fixtures();

}  // namespace leibniz
