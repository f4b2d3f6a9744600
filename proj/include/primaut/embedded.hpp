#pragma once

namespace primaut::embedded {

// Data files compiled into the library at build time (see cmake/embed.cmake).
extern const char* const primaut_catalog_json;
extern const char* const primaut_registry_json;

}  // namespace primaut::embedded
