#pragma once

#include <cstddef>

namespace curvelab::detail {

struct EmbeddedFile {
  const char* name;
  const char* text;
};

extern const EmbeddedFile kEmbeddedCatalog[];
extern const std::size_t kEmbeddedCatalogCount;
extern const EmbeddedFile kEmbeddedConstructions[];
extern const std::size_t kEmbeddedConstructionsCount;

}  // namespace curvelab::detail
