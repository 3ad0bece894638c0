#pragma once

#include <stdexcept>
#include <string>

namespace trifold {

// Malformed input document (gluing table, diagram file, PACE file, ...).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Operation requires a closed triangulation.
struct not_closed_error : std::runtime_error {
    explicit not_closed_error(const std::string& what) : std::runtime_error(what) {}
};

// Orientation constraint propagation found a contradiction.
struct non_orientable_error : std::runtime_error {
    explicit non_orientable_error(const std::string& what) : std::runtime_error(what) {}
};

// Arguments violate an operation's stated parameter conditions.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Two objects passed together were not produced from each other.
struct provenance_error : std::runtime_error {
    explicit provenance_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace trifold
